//! Brute-force validators.
//!
//! Nothing here is on the production path. These routines recompute what the
//! other modules produce by slower, more literal means: flood fills instead of
//! crossing numbers, exhaustive cycle enumeration instead of boundary tracing.
//! Enumeration is exponential and refuses large inputs.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::boundary::{
    boundary_edges, decompose_into_cycles, BoundaryDecomposition, BoundaryError,
};
use crate::cornergraph::{
    interior_cells, validate_circuit, validate_cycle, Corner, CornerGraph, Cycle, GridEdge,
};
use crate::cyclemerge::merge;
use crate::lattice::{Adjacency, Cell, Component, Grid, Window};
use crate::report::Report;

/// Largest corner graph [`enumerate_cycles`] accepts.
pub const MAX_ENUMERATION_CORNERS: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("corner graph has {0} corners, enumeration limit is {MAX_ENUMERATION_CORNERS}")]
    TooManyCorners(usize),
    #[error("more than {0} cycles")]
    CapExceeded(usize),
    #[error("union of interiors is not edge-connected")]
    UnionNotConnected,
    #[error("union contour splits into {0} cycles")]
    MultipleContours(usize),
    #[error("union of interiors has holes")]
    UnionHasHoles,
    #[error(transparent)]
    Boundary(#[from] BoundaryError),
}

/// Vacant in-window cells that connect to the outside of the window through
/// edge-adjacent vacant cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExteriorMap {
    window: Window,
    reachable: Vec<bool>,
}

impl ExteriorMap {
    /// Cells outside the window always count as reachable.
    pub fn is_reachable(&self, c: Cell) -> bool {
        self.window.index_of(c).is_none_or(|i| self.reachable[i])
    }

    pub fn window(&self) -> Window {
        self.window
    }
}

pub fn exterior_vacant(g: &Grid) -> ExteriorMap {
    let window = g.window();
    let mut reachable = vec![false; window.len()];
    let mut queue: VecDeque<Cell> = VecDeque::new();
    // Seed from the ring of cells just outside the window.
    let ring = window.expanded(1);
    for c in ring.cells().filter(|&c| !window.contains(c)) {
        queue.push_back(c);
    }
    while let Some(c) = queue.pop_front() {
        for n in [
            c.offset(1, 0),
            c.offset(-1, 0),
            c.offset(0, 1),
            c.offset(0, -1),
        ] {
            let Some(i) = window.index_of(n) else {
                continue;
            };
            if !reachable[i] && !g.is_occupied(n) {
                reachable[i] = true;
                queue.push_back(n);
            }
        }
    }
    ExteriorMap { window, reachable }
}

/// Interior of a cycle by flooding from outside its bounding box without
/// crossing cycle edges, then taking the complement.
pub fn interior_by_flood(c: &Cycle) -> BTreeSet<Cell> {
    let Some(a_min) = c.corners().iter().map(|k| k.a).min() else {
        return BTreeSet::new();
    };
    let a_max = c.corners().iter().map(|k| k.a).max().unwrap_or(a_min);
    let b_min = c.corners().iter().map(|k| k.b).min().unwrap_or(0);
    let b_max = c.corners().iter().map(|k| k.b).max().unwrap_or(0);
    let window = Window {
        x_min: a_min - 1,
        x_max: a_max,
        y_min: b_min - 1,
        y_max: b_max,
    };
    let walls = c.edge_set();
    let mut outside = vec![false; window.len()];
    let mut queue = VecDeque::from([window.cell_at(0)]);
    outside[0] = true;
    while let Some(p) = queue.pop_front() {
        let steps = [
            (p.offset(1, 0), GridEdge::vertical(p.x + 1, p.y)),
            (p.offset(-1, 0), GridEdge::vertical(p.x, p.y)),
            (p.offset(0, 1), GridEdge::horizontal(p.x, p.y + 1)),
            (p.offset(0, -1), GridEdge::horizontal(p.x, p.y)),
        ];
        for (q, wall) in steps {
            let Some(i) = window.index_of(q) else {
                continue;
            };
            if !outside[i] && !walls.contains(&wall) {
                outside[i] = true;
                queue.push_back(q);
            }
        }
    }
    window
        .cells()
        .filter(|&p| !outside[window.index_of(p).unwrap()])
        .collect()
}

/// Every vertex-simple cycle of the corner graph, canonical and sorted.
///
/// Refuses graphs with more than [`MAX_ENUMERATION_CORNERS`] corners and
/// stops with an error once more than `cap` cycles are found.
pub fn enumerate_cycles(gc: &CornerGraph, cap: usize) -> Result<Vec<Cycle>, OracleError> {
    let corners: Vec<Corner> = gc.vertices().iter().copied().collect();
    let n = corners.len();
    if n > MAX_ENUMERATION_CORNERS {
        return Err(OracleError::TooManyCorners(n));
    }
    let index: BTreeMap<Corner, usize> = corners.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let adjacency: Vec<Vec<usize>> = corners
        .iter()
        .map(|&c| gc.neighbors(c).map(|w| index[&w]).collect())
        .collect();

    struct Search<'a> {
        adjacency: &'a [Vec<usize>],
        corners: &'a [Corner],
        cap: usize,
        start: usize,
        path: Vec<usize>,
        out: Vec<Cycle>,
    }

    impl Search<'_> {
        // Cycles whose smallest vertex is `start`; each direction is reported
        // once by requiring the second vertex to be smaller than the last.
        fn extend(&mut self, v: usize, visited: u32) -> Result<(), OracleError> {
            for k in 0..self.adjacency[v].len() {
                let w = self.adjacency[v][k];
                if w == self.start {
                    if self.path.len() >= 4 && self.path[1] < v {
                        if self.out.len() == self.cap {
                            return Err(OracleError::CapExceeded(self.cap));
                        }
                        let seq: Vec<Corner> = self.path.iter().map(|&i| self.corners[i]).collect();
                        self.out
                            .push(validate_cycle(&seq).expect("search yields simple cycles"));
                    }
                } else if w > self.start && visited & (1 << w) == 0 {
                    self.path.push(w);
                    self.extend(w, visited | 1 << w)?;
                    self.path.pop();
                }
            }
            Ok(())
        }
    }

    let mut search = Search {
        adjacency: &adjacency,
        corners: &corners,
        cap,
        start: 0,
        path: Vec::with_capacity(n),
        out: Vec::new(),
    };
    for s in 0..n {
        search.start = s;
        search.path.clear();
        search.path.push(s);
        search.extend(s, 1 << s)?;
    }
    let mut out = search.out;
    out.sort();
    Ok(out)
}

/// Edges of the corner graph that lie inside no cycle of the graph.
pub fn outermost_edges_by_definition(
    gc: &CornerGraph,
    cap: usize,
) -> Result<BTreeSet<GridEdge>, OracleError> {
    let mut enclosed = BTreeSet::new();
    for c in enumerate_cycles(gc, cap)? {
        let inside = interior_cells(&c);
        // An edge off the cycle has both neighbours on the same side.
        for &e in gc.edges() {
            let (p, q) = e.adjacent_cells();
            if inside.contains(&p) && inside.contains(&q) {
                enclosed.insert(e);
            }
        }
    }
    Ok(gc.edges().difference(&enclosed).copied().collect())
}

/// Outer contour of the union of two cycles' interiors.
///
/// Refuses when the union is not edge-connected, when its outer boundary is
/// more than one cycle, or when the union has holes.
pub fn union_contour(c1: &Cycle, c2: &Cycle) -> Result<Cycle, OracleError> {
    let cells: BTreeSet<Cell> = interior_cells(c1)
        .union(&interior_cells(c2))
        .copied()
        .collect();
    let Some(&seed) = cells.first() else {
        return Err(OracleError::UnionNotConnected);
    };
    let mut seen = BTreeSet::from([seed]);
    let mut stack = vec![seed];
    while let Some(c) = stack.pop() {
        for n in [
            c.offset(1, 0),
            c.offset(-1, 0),
            c.offset(0, 1),
            c.offset(0, -1),
        ] {
            if cells.contains(&n) && seen.insert(n) {
                stack.push(n);
            }
        }
    }
    if seen.len() != cells.len() {
        return Err(OracleError::UnionNotConnected);
    }
    let region = Component::from_cells(cells, Adjacency::Plus, seed);
    let mut contours = decompose_into_cycles(&boundary_edges(&region), &region)?;
    if contours.len() != 1 {
        return Err(OracleError::MultipleContours(contours.len()));
    }
    let contour = contours.remove(0);
    if &interior_cells(&contour) != region.cells() {
        return Err(OracleError::UnionHasHoles);
    }
    Ok(contour)
}

/// Outermost boundary edges recomputed from [`exterior_vacant`] on a grid
/// holding only the component's cells.
fn flood_boundary_edges(comp: &Component) -> BTreeSet<GridEdge> {
    let Some(window) = Window::bounding(comp.cells()) else {
        return BTreeSet::new();
    };
    let grid = Grid::from_cells(window, comp.cells()).expect("cells inside their bounding box");
    let exterior = exterior_vacant(&grid);
    let mut out = BTreeSet::new();
    for &c in comp.cells() {
        let sides = [
            (c.offset(0, -1), GridEdge::horizontal(c.x, c.y)),
            (c.offset(1, 0), GridEdge::vertical(c.x + 1, c.y)),
            (c.offset(0, 1), GridEdge::horizontal(c.x, c.y + 1)),
            (c.offset(-1, 0), GridEdge::vertical(c.x, c.y)),
        ];
        for (across, e) in sides {
            if !comp.contains(across) && exterior.is_reachable(across) {
                out.insert(e);
            }
        }
    }
    out
}

/// Checks every structural property of an outermost boundary decomposition.
pub fn check_decomposition(comp: &Component, d: &BoundaryDecomposition) -> Report {
    let mut report = Report::default();
    let interiors: Vec<BTreeSet<Cell>> = d.cycles.iter().map(interior_cells).collect();
    let corner_sets: Vec<BTreeSet<Corner>> = d
        .cycles
        .iter()
        .map(|c| c.corners().iter().copied().collect())
        .collect();
    let edges = d.edges();

    report.record(
        "nonempty iff component nonempty",
        d.cycles.is_empty() == comp.is_empty(),
    );
    report.record(
        "cycles are canonical",
        d.cycles
            .iter()
            .all(|c| validate_cycle(c.corners()).as_ref() == Ok(c)),
    );
    report.record("no edge on two cycles", edges.len() == d.edge_count());
    report.record(
        "cycle edges equal boundary edges",
        edges == boundary_edges(comp),
    );
    report.record(
        "cycle edges equal flood-fill edges",
        edges == flood_boundary_edges(comp),
    );

    // (i) union of cycles is connected
    let mut union_connected = true;
    if let Some(start) = edges.first().map(GridEdge::u) {
        let mut adjacency: BTreeMap<Corner, Vec<Corner>> = BTreeMap::new();
        for e in &edges {
            adjacency.entry(e.u()).or_default().push(e.v());
            adjacency.entry(e.v()).or_default().push(e.u());
        }
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &adjacency[&v] {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        union_connected = seen.len() == adjacency.len();
    }
    report.record("(i) cycle union connected", union_connected);

    // (ii) disjoint interiors, at most one shared corner
    let mut pairwise = true;
    for i in 0..d.cycles.len() {
        for j in i + 1..d.cycles.len() {
            pairwise &= interiors[i].is_disjoint(&interiors[j]);
            pairwise &= corner_sets[i].intersection(&corner_sets[j]).count() <= 1;
        }
    }
    report.record(
        "(ii) disjoint interiors, one shared corner at most",
        pairwise,
    );

    // (iii) every cell inside exactly one cycle
    let covered = comp.cells().iter().all(|cell| {
        let owners: Vec<usize> = (0..interiors.len())
            .filter(|&i| interiors[i].contains(cell))
            .collect();
        owners.len() == 1 && d.cell_to_cycle.get(cell) == Some(&owners[0])
    });
    report.record(
        "(iii) each cell inside exactly one cycle",
        covered && d.cell_to_cycle.len() == comp.len(),
    );

    // (iv) occupied inside, vacant outside
    let sides = d.cycles.iter().zip(&interiors).all(|(c, inside)| {
        c.edges().all(|e| {
            let (p, q) = e.adjacent_cells();
            let (occ, vac) = if comp.contains(p) { (p, q) } else { (q, p) };
            comp.contains(occ)
                && !comp.contains(vac)
                && inside.contains(&occ)
                && !inside.contains(&vac)
        })
    });
    report.record("(iv) occupied cell inside, vacant cell outside", sides);

    // Cycle tree
    let mut at_corner: BTreeMap<Corner, Vec<usize>> = BTreeMap::new();
    for (i, set) in corner_sets.iter().enumerate() {
        for &c in set {
            at_corner.entry(c).or_default().push(i);
        }
    }
    report.record(
        "at most two cycles per corner",
        at_corner.values().all(|owners| owners.len() <= 2),
    );
    let mut expected_tree: Vec<(usize, usize, Corner)> = at_corner
        .iter()
        .filter(|(_, o)| o.len() == 2)
        .map(|(&c, o)| (o[0], o[1], c))
        .collect();
    expected_tree.sort();
    let mut actual_tree: Vec<(usize, usize, Corner)> = d
        .tree
        .edges()
        .iter()
        .map(|e| (e.a, e.b, e.corner))
        .collect();
    actual_tree.sort();
    report.record(
        "tree edges are the shared corners",
        expected_tree == actual_tree,
    );
    report.record(
        "tree is connected with nodes - 1 edges",
        d.tree.node_count() == d.cycles.len() && d.tree.is_tree(),
    );

    // Outer circuit
    let circuit_ok = if d.cycles.is_empty() {
        d.circuit.is_empty()
    } else {
        let mut walked: Vec<GridEdge> = d.circuit.edges().collect();
        walked.sort();
        validate_circuit(d.circuit.corners()).is_ok()
            && walked.into_iter().eq(edges.iter().copied())
    };
    report.record("circuit covers every edge once", circuit_ok);
    report
}

/// Checks that `cycle` is the outer boundary of a plus component: all cells
/// inside, every edge between an inside component cell and an outside
/// vacant cell.
pub fn check_plus_cycle(comp: &Component, cycle: &Cycle) -> Report {
    let mut report = Report::default();
    let inside = interior_cells(cycle);
    report.record("all cells inside", comp.cells().is_subset(&inside));
    report.record(
        "edges separate inside occupied from outside vacant",
        cycle.edges().all(|e| {
            let (p, q) = e.adjacent_cells();
            let (occ, vac) = if inside.contains(&p) { (p, q) } else { (q, p) };
            comp.contains(occ) && !comp.contains(vac) && !inside.contains(&vac)
        }),
    );
    report
}

/// Checks the outermost cycle `dk` of cell `k` against every cycle of the
/// corner graph that encloses `k`: none may reach outside `dk`, and merging
/// any of them into `dk` must return `dk`.
pub fn check_outermost_cycle(
    gc: &CornerGraph,
    k: Cell,
    dk: &Cycle,
    cap: usize,
) -> Result<Report, OracleError> {
    let comp = gc.source_component();
    let mut report = Report::default();
    let dk_inside = interior_cells(dk);
    let dk_edges = dk.edge_set();
    report.record("(a) cell inside", dk_inside.contains(&k));
    report.record(
        "(b) edges separate inside occupied from outside vacant",
        dk.edges().all(|e| {
            let (p, q) = e.adjacent_cells();
            let (occ, vac) = if dk_inside.contains(&p) {
                (p, q)
            } else {
                (q, p)
            };
            comp.contains(occ) && !comp.contains(vac) && !dk_inside.contains(&vac)
        }),
    );
    let mut enclosed = true;
    let mut merge_fixed = true;
    for c in enumerate_cycles(gc, cap)? {
        if !c.encloses_cell(k) {
            continue;
        }
        enclosed &= c
            .edges()
            .all(|e| dk_edges.contains(&e) || dk_inside.contains(&e.adjacent_cells().0));
        let shared = c
            .corners()
            .iter()
            .filter(|&&v| dk.contains_corner(v))
            .count();
        if shared >= 2 {
            merge_fixed &= merge(&c, dk).is_ok_and(|(m, _)| &m == dk);
        }
    }
    report.record("(c) every enclosing cycle stays on or inside", enclosed);
    report.record(
        "merging an enclosing cycle returns it unchanged",
        merge_fixed,
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::outermost_boundary;
    use crate::cornergraph::build_corner_graph;

    fn comp(list: &[(i32, i32)]) -> Component {
        let cells: BTreeSet<Cell> = list.iter().map(|&(x, y)| Cell::new(x, y)).collect();
        let seed = *cells.first().unwrap();
        Component::from_cells(cells, Adjacency::Star, seed)
    }

    #[test]
    fn exterior_of_vacant_and_full_grids() {
        let w = Window::sized(3, 3).unwrap();
        let empty = exterior_vacant(&Grid::vacant(w));
        assert!(w.cells().all(|c| empty.is_reachable(c)));
        let full = exterior_vacant(&Grid::from_bitmask(w, 0x1ff).unwrap());
        assert!(w.cells().all(|c| !full.is_reachable(c)));
    }

    #[test]
    fn ring_blocks_centre() {
        let w = Window::sized(3, 3).unwrap();
        let ring = Grid::from_bitmask(w, 0x1ff & !(1 << 4)).unwrap();
        assert!(!exterior_vacant(&ring).is_reachable(Cell::new(1, 1)));
    }

    #[test]
    fn enumeration_counts() {
        let count = |cells: &[(i32, i32)]| {
            enumerate_cycles(&build_corner_graph(&comp(cells)), 1000)
                .unwrap()
                .len()
        };
        assert_eq!(count(&[(0, 0)]), 1);
        assert_eq!(count(&[(0, 0), (1, 0)]), 3);
        assert_eq!(count(&[(0, 0), (1, 1)]), 2);
        // 2×2 block: 4 unit squares, 4 dominoes, 4 L-trominoes, 1 outer square.
        assert_eq!(count(&[(0, 0), (1, 0), (0, 1), (1, 1)]), 13);
    }

    #[test]
    fn enumeration_guards() {
        let big: Vec<(i32, i32)> = (0..6).flat_map(|y| (0..6).map(move |x| (x, y))).collect();
        assert_eq!(
            enumerate_cycles(&build_corner_graph(&comp(&big)), 10),
            Err(OracleError::TooManyCorners(49))
        );
        let block = [(0, 0), (1, 0), (0, 1), (1, 1)];
        assert_eq!(
            enumerate_cycles(&build_corner_graph(&comp(&block)), 5),
            Err(OracleError::CapExceeded(5))
        );
    }

    #[test]
    fn definition_classification_fixtures() {
        let outer = |cells: &[(i32, i32)]| {
            outermost_edges_by_definition(&build_corner_graph(&comp(cells)), 1000).unwrap()
        };
        assert_eq!(outer(&[(0, 0)]).len(), 4);
        let domino = outer(&[(0, 0), (1, 0)]);
        assert_eq!(domino.len(), 6);
        assert!(!domino.contains(&GridEdge::vertical(1, 0)));
        assert_eq!(outer(&[(0, 0), (1, 1)]).len(), 8);
    }

    #[test]
    fn flood_interior_matches_crossing_number() {
        let u = comp(&[(0, 0), (1, 0), (2, 0), (0, 1), (2, 1)]);
        let d = outermost_boundary(&u).unwrap();
        assert_eq!(
            interior_by_flood(&d.cycles[0]),
            interior_cells(&d.cycles[0])
        );
        assert_eq!(&interior_by_flood(&d.cycles[0]), u.cells());
    }

    #[test]
    fn union_contour_fixtures() {
        let a = Cycle::unit(Cell::new(0, 0));
        let b = Cycle::unit(Cell::new(1, 0));
        assert_eq!(union_contour(&a, &b).unwrap().len(), 6);
        let diag = Cycle::unit(Cell::new(1, 1));
        assert_eq!(
            union_contour(&a, &diag),
            Err(OracleError::UnionNotConnected)
        );
        assert_eq!(union_contour(&a, &a).unwrap(), a);
    }

    #[test]
    fn union_contour_refuses_holes() {
        let ring: Vec<(i32, i32)> = (0..3)
            .flat_map(|y| (0..3).map(move |x| (x, y)))
            .filter(|&p| p != (1, 1))
            .collect();
        let left = comp(&ring[..5]);
        let right = comp(&ring[3..]);
        let lc = outermost_boundary(&left).unwrap().cycles[0].clone();
        let rc = outermost_boundary(&right).unwrap().cycles[0].clone();
        assert_eq!(union_contour(&lc, &rc), Err(OracleError::UnionHasHoles));
    }

    #[test]
    fn decomposition_check_flags_tampering() {
        let c = comp(&[(0, 0), (1, 1)]);
        let mut d = outermost_boundary(&c).unwrap();
        assert!(check_decomposition(&c, &d).all_passed());
        d.cycles.pop();
        let report = check_decomposition(&c, &d);
        assert!(!report.all_passed());
        assert!(report.failures().any(|f| f.starts_with("(iii)")));
    }

    #[test]
    fn outermost_cycle_against_enumeration() {
        let u = comp(&[(0, 0), (1, 0), (2, 0), (0, 1), (2, 1)]);
        let gc = build_corner_graph(&u);
        let d = outermost_boundary(&u).unwrap();
        for &k in u.cells() {
            let report = check_outermost_cycle(&gc, k, &d.cycles[0], 10_000).unwrap();
            assert!(
                report.all_passed(),
                "{k}: {:?}",
                report.failures().collect::<Vec<_>>()
            );
        }
        // A unit square is not the outermost cycle of its cell here.
        let wrong = Cycle::unit(Cell::new(0, 0));
        let report = check_outermost_cycle(&gc, Cell::new(0, 0), &wrong, 10_000).unwrap();
        assert!(!report.all_passed());
    }
}
