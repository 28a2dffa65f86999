//! Merging two cycles that share more than one corner.
//!
//! Given cycles `c1` and `c2` with at least two common corners there is a
//! unique cycle made only of their edges whose interior contains both of
//! theirs and which leaves no edge of either input outside. [`merge`] builds
//! it by growing `c1`: find the first corner of the current cycle where an
//! edge of `c2` leaves to the outside, follow `c2` until it returns, and
//! splice that excursion in on whichever side encloses the other. The loop
//! stops once no edge of `c2` is left outside.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::cornergraph::{interior_cells, validate_cycle, Corner, Cycle, GridEdge, PathError};
use crate::lattice::Cell;
use crate::report::Report;

/// Which part of the current cycle survives a splice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpliceSide {
    /// The segment running forward from the attachment corner.
    FirstSegment,
    /// The segment running backward from the attachment corner.
    SecondSegment,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeIteration {
    pub attachment: Corner,
    /// Corners of `c2` from the attachment corner to where it meets the
    /// current cycle again, both ends included.
    pub exterior_path: Vec<Corner>,
    pub chosen_side: SpliceSide,
    pub cycle_after: Cycle,
}

/// Every splice performed by [`merge`], in order. Empty when one input
/// already encloses the other.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MergeTrace {
    pub iterations: Vec<MergeIteration>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MergeError {
    #[error("cycles share {0} corners, need at least 2")]
    TooFewSharedCorners(usize),
    #[error("exterior path from {0} never met the current cycle again")]
    PathDidNotReturn(Corner),
    #[error("splice at {attachment} produced an invalid cycle: {source}")]
    InvalidSplice {
        attachment: Corner,
        source: PathError,
    },
    #[error("neither splice side at {0} encloses the other")]
    NoEnclosingSide(Corner),
}

/// A cycle with its edges and interior cells precomputed.
struct Region {
    cycle: Cycle,
    edges: BTreeSet<GridEdge>,
    interior: BTreeSet<Cell>,
}

impl Region {
    fn new(cycle: Cycle) -> Self {
        Self {
            edges: cycle.edge_set(),
            interior: interior_cells(&cycle),
            cycle,
        }
    }

    fn is_exterior(&self, e: GridEdge) -> bool {
        !self.edges.contains(&e) && !self.interior.contains(&e.adjacent_cells().0)
    }

    /// Every edge of `other` lies on or inside this region.
    fn covers(&self, other: &Cycle) -> bool {
        other.edges().all(|e| !self.is_exterior(e))
    }
}

fn c2_edge(c2: &[Corner], i: usize, j: usize) -> GridEdge {
    GridEdge::new(c2[i % c2.len()], c2[j % c2.len()]).expect("cycle steps are unit")
}

/// Merges `c1` and `c2` into the innermost cycle enclosing both.
pub fn merge(c1: &Cycle, c2: &Cycle) -> Result<(Cycle, MergeTrace), MergeError> {
    let shared = c1
        .corners()
        .iter()
        .filter(|&&c| c2.contains_corner(c))
        .count();
    if shared <= 1 {
        return Err(MergeError::TooFewSharedCorners(shared));
    }
    let mut trace = MergeTrace::default();
    let first = Region::new(c1.clone());
    if Region::new(c2.clone()).covers(c1) {
        return Ok((c2.clone(), trace));
    }
    if first.covers(c2) {
        return Ok((c1.clone(), trace));
    }

    let v = c2.corners();
    let m = v.len();
    let position_in_c2: BTreeMap<Corner, usize> =
        v.iter().enumerate().map(|(i, &c)| (c, i)).collect();

    let mut current = first;
    loop {
        // First corner of the current cycle that starts an exterior edge of c2,
        // together with the direction along c2 that leaves.
        let attach = current.cycle.corners().iter().find_map(|u| {
            let &i = position_in_c2.get(u)?;
            if current.is_exterior(c2_edge(v, i, i + 1)) {
                Some((i, 1))
            } else if current.is_exterior(c2_edge(v, i + m - 1, i)) {
                Some((i, m - 1))
            } else {
                None
            }
        });
        let Some((start, step)) = attach else {
            break;
        };
        let attachment = v[start];
        let on_current: BTreeSet<Corner> = current.cycle.corners().iter().copied().collect();

        let mut path = alloc::vec![attachment];
        let mut i = start;
        loop {
            i = (i + step) % m;
            path.push(v[i]);
            if on_current.contains(&v[i]) {
                break;
            }
            if i == start {
                return Err(MergeError::PathDidNotReturn(attachment));
            }
        }
        let rejoin = *path.last().expect("path is nonempty");
        if rejoin == attachment {
            return Err(MergeError::PathDidNotReturn(attachment));
        }

        let k = current.cycle.corners();
        let n = k.len();
        let from = k
            .iter()
            .position(|&c| c == attachment)
            .expect("attachment lies on the cycle");
        let to = k
            .iter()
            .position(|&c| c == rejoin)
            .expect("rejoin lies on the cycle");
        let forward: Vec<Corner> = (0..n)
            .map(|d| k[(from + d) % n])
            .take((to + n - from) % n + 1)
            .collect();
        let backward: Vec<Corner> = (0..n)
            .map(|d| k[(from + n - d) % n])
            .take((from + n - to) % n + 1)
            .collect();
        let detour = &path[1..path.len() - 1];

        let splice = |segment: Vec<Corner>| -> Result<Region, MergeError> {
            let mut seq = segment;
            seq.extend(detour.iter().rev());
            validate_cycle(&seq)
                .map(Region::new)
                .map_err(|source| MergeError::InvalidSplice { attachment, source })
        };
        let first_side = splice(forward)?;
        let second_side = splice(backward)?;
        let (chosen_side, next) = if first_side.interior.is_superset(&second_side.interior) {
            (SpliceSide::FirstSegment, first_side)
        } else if second_side.interior.is_superset(&first_side.interior) {
            (SpliceSide::SecondSegment, second_side)
        } else {
            return Err(MergeError::NoEnclosingSide(attachment));
        };
        debug_assert!(next.interior.len() > current.interior.len());

        trace.iterations.push(MergeIteration {
            attachment,
            exterior_path: path,
            chosen_side,
            cycle_after: next.cycle.clone(),
        });
        current = next;
    }
    Ok((current.cycle, trace))
}

/// Pass/fail for each merge property; see [`merge_invariants_check`].
pub type MergeReport = Report;

/// Re-checks a merge result against the invariants of the construction.
///
/// Per intermediate cycle `K` of the trace:
/// 1. `K` uses only edges of `c1` and `c2`;
/// 2. every edge of `c1` is on or inside `K`;
/// 3. `K` contains an edge of `c2` lying outside `c1`;
/// 4. `K` encloses the interior of `c1`;
///
/// and each splice strictly grows the interior. For the final cycle it
/// additionally checks that every edge of `c2` is on or inside it, that it
/// encloses the interior of `c2`, that it contains an edge of `c1` outside
/// `c2` whenever `c1` has one, and that merging in the opposite order gives
/// the same cycle.
pub fn merge_invariants_check(
    c1: &Cycle,
    c2: &Cycle,
    result: &Cycle,
    trace: &MergeTrace,
) -> MergeReport {
    let mut report = MergeReport::default();
    let r1 = Region::new(c1.clone());
    let r2 = Region::new(c2.clone());
    let c2_outside_c1: BTreeSet<GridEdge> = c2.edges().filter(|&e| r1.is_exterior(e)).collect();
    let c1_outside_c2: BTreeSet<GridEdge> = c1.edges().filter(|&e| r2.is_exterior(e)).collect();

    let mut stages: Vec<&Cycle> = trace.iterations.iter().map(|it| &it.cycle_after).collect();
    let trace_ends_at_result = stages.last().is_none_or(|&last| last == result);
    stages.push(result);
    let regions: Vec<Region> = stages.iter().map(|&c| Region::new(c.clone())).collect();

    let only_input_edges = regions.iter().all(|k| {
        k.edges
            .iter()
            .all(|e| r1.edges.contains(e) || r2.edges.contains(e))
    });
    let c1_covered = regions.iter().all(|k| k.covers(c1));
    let c2_exterior_kept = c2_outside_c1.is_empty()
        || regions
            .iter()
            .all(|k| k.edges.iter().any(|e| c2_outside_c1.contains(e)));
    let c1_interior_kept = regions.iter().all(|k| k.interior.is_superset(&r1.interior));
    let mut growth = true;
    let mut previous = r1.interior.len();
    for k in &regions[..trace.iterations.len()] {
        growth &= k.interior.len() > previous;
        previous = k.interior.len();
    }

    let last = regions.last().expect("result is always present");
    report.record("trace ends at result", trace_ends_at_result);
    report.record("(1) only edges of c1 and c2", only_input_edges);
    report.record("(2) c1 on or inside", c1_covered);
    report.record("(3) keeps an edge of c2 outside c1", c2_exterior_kept);
    report.record("(4) encloses interior of c1", c1_interior_kept);
    report.record("interior grows each splice", growth);
    report.record("(5) c2 on or inside", last.covers(c2));
    report.record(
        "(3') keeps an edge of c1 outside c2",
        c1_outside_c2.is_empty() || last.edges.iter().any(|e| c1_outside_c2.contains(e)),
    );
    report.record(
        "(4') encloses interior of c2",
        last.interior.is_superset(&r2.interior),
    );
    report.record(
        "symmetric",
        merge(c2, c1).is_ok_and(|(other, _)| &other == result),
    );
    report
}
