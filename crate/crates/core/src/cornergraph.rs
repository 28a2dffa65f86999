//! Corners, grid edges, cycles and circuits, and the interior predicates.
//!
//! Corner `(a, b)` is the point `(a - 1/2, b - 1/2)`, so cell `(x, y)` has
//! corners `(x, y)`, `(x + 1, y)`, `(x, y + 1)` and `(x + 1, y + 1)`. Cell
//! centres sit on integers and edges on half-integers, which keeps every
//! interior test exact in integer arithmetic.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::lattice::{Cell, Component};

/// A lattice corner, ordered lexicographically by `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Corner {
    pub a: i32,
    pub b: i32,
}

impl Corner {
    pub const fn new(a: i32, b: i32) -> Self {
        Self { a, b }
    }

    pub fn is_adjacent(self, other: Corner) -> bool {
        (self.a - other.a).abs() + (self.b - other.b).abs() == 1
    }

    /// The four cells around this corner: lower-left, lower-right,
    /// upper-left, upper-right.
    pub fn cells_around(self) -> [Cell; 4] {
        [
            Cell::new(self.a - 1, self.b - 1),
            Cell::new(self.a, self.b - 1),
            Cell::new(self.a - 1, self.b),
            Cell::new(self.a, self.b),
        ]
    }
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.a, self.b)
    }
}

/// A unit edge between two adjacent corners, smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridEdge {
    u: Corner,
    v: Corner,
}

impl GridEdge {
    pub fn new(p: Corner, q: Corner) -> Option<Self> {
        if !p.is_adjacent(q) {
            return None;
        }
        let (u, v) = if p < q { (p, q) } else { (q, p) };
        Some(Self { u, v })
    }

    /// Edge from `(a, b)` to `(a + 1, b)`.
    pub const fn horizontal(a: i32, b: i32) -> Self {
        Self {
            u: Corner::new(a, b),
            v: Corner::new(a + 1, b),
        }
    }

    /// Edge from `(a, b)` to `(a, b + 1)`.
    pub const fn vertical(a: i32, b: i32) -> Self {
        Self {
            u: Corner::new(a, b),
            v: Corner::new(a, b + 1),
        }
    }

    pub fn u(&self) -> Corner {
        self.u
    }

    pub fn v(&self) -> Corner {
        self.v
    }

    pub fn is_horizontal(&self) -> bool {
        self.u.b == self.v.b
    }

    pub fn has_endpoint(&self, c: Corner) -> bool {
        self.u == c || self.v == c
    }

    pub fn other_endpoint(&self, c: Corner) -> Option<Corner> {
        if self.u == c {
            Some(self.v)
        } else if self.v == c {
            Some(self.u)
        } else {
            None
        }
    }

    /// The two cells this edge separates: `(below, above)` for a horizontal
    /// edge, `(left, right)` for a vertical one.
    pub fn adjacent_cells(&self) -> (Cell, Cell) {
        let Corner { a, b } = self.u;
        if self.is_horizontal() {
            (Cell::new(a, b - 1), Cell::new(a, b))
        } else {
            (Cell::new(a - 1, b), Cell::new(a, b))
        }
    }
}

impl fmt::Display for GridEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Corners of a cell, counterclockwise from the lower-left one.
pub fn cell_corners(c: Cell) -> [Corner; 4] {
    [
        Corner::new(c.x, c.y),
        Corner::new(c.x + 1, c.y),
        Corner::new(c.x + 1, c.y + 1),
        Corner::new(c.x, c.y + 1),
    ]
}

/// Edges of a cell: bottom, right, top, left.
pub fn cell_edges(c: Cell) -> [GridEdge; 4] {
    [
        GridEdge::horizontal(c.x, c.y),
        GridEdge::vertical(c.x + 1, c.y),
        GridEdge::horizontal(c.x, c.y + 1),
        GridEdge::vertical(c.x, c.y),
    ]
}

/// Why a corner sequence is not a valid cycle or circuit.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PathError {
    #[error("closed sequence needs at least 4 corners, got {0}")]
    TooShort(usize),
    #[error("step {index} from {from} to {to} is not a unit edge")]
    NonAdjacentStep {
        index: usize,
        from: Corner,
        to: Corner,
    },
    #[error("corner {corner} repeats at position {index}")]
    RepeatedVertex { index: usize, corner: Corner },
    #[error("edge {edge} repeats at step {index}")]
    RepeatedEdge { index: usize, edge: GridEdge },
}

/// Drops a trailing copy of the first corner, if present.
fn open_sequence(seq: &[Corner]) -> &[Corner] {
    match seq {
        [first, .., last] if first == last => &seq[..seq.len() - 1],
        _ => seq,
    }
}

fn check_steps(seq: &[Corner]) -> Result<(), PathError> {
    if seq.len() < 4 {
        return Err(PathError::TooShort(seq.len()));
    }
    for i in 0..seq.len() {
        let (from, to) = (seq[i], seq[(i + 1) % seq.len()]);
        if !from.is_adjacent(to) {
            return Err(PathError::NonAdjacentStep { index: i, from, to });
        }
    }
    Ok(())
}

/// Twice the signed area enclosed by a closed corner sequence.
pub(crate) fn signed_area2(seq: &[Corner]) -> i64 {
    let n = seq.len();
    (0..n)
        .map(|i| {
            let (p, q) = (seq[i], seq[(i + 1) % n]);
            p.a as i64 * q.b as i64 - q.a as i64 * p.b as i64
        })
        .sum()
}

/// A vertex-simple closed path on the corner lattice.
///
/// Stored in canonical form: starting at the smallest corner and running
/// counterclockwise. Two cycles are equal iff their canonical forms are.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    corners: Vec<Corner>,
}

/// Checks a closed corner sequence and returns it as a canonical [`Cycle`].
///
/// The sequence may or may not repeat its first corner at the end.
pub fn validate_cycle(seq: &[Corner]) -> Result<Cycle, PathError> {
    let seq = open_sequence(seq);
    check_steps(seq)?;
    let mut seen = BTreeSet::new();
    for (index, &corner) in seq.iter().enumerate() {
        if !seen.insert(corner) {
            return Err(PathError::RepeatedVertex { index, corner });
        }
    }
    Ok(Cycle::canonical(seq))
}

impl Cycle {
    fn canonical(seq: &[Corner]) -> Self {
        let start = (0..seq.len()).min_by_key(|&i| seq[i]).unwrap_or(0);
        let mut corners: Vec<Corner> = seq[start..].iter().chain(&seq[..start]).copied().collect();
        if signed_area2(&corners) < 0 {
            corners[1..].reverse();
        }
        Self { corners }
    }

    /// The four-edge cycle around one cell.
    pub fn unit(c: Cell) -> Self {
        Self::canonical(&cell_corners(c))
    }

    /// Corners in canonical order, without repeating the first.
    pub fn corners(&self) -> &[Corner] {
        &self.corners
    }

    /// Number of edges (equal to the number of corners).
    pub fn len(&self) -> usize {
        self.corners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = GridEdge> + '_ {
        let n = self.corners.len();
        (0..n).map(move |i| {
            GridEdge::new(self.corners[i], self.corners[(i + 1) % n]).expect("cycle steps are unit")
        })
    }

    pub fn edge_set(&self) -> BTreeSet<GridEdge> {
        self.edges().collect()
    }

    pub fn contains_corner(&self, c: Corner) -> bool {
        self.corners.contains(&c)
    }

    pub fn contains_edge(&self, e: GridEdge) -> bool {
        self.edges().any(|f| f == e)
    }

    /// Enclosed area in unit squares.
    pub fn area(&self) -> u64 {
        signed_area2(&self.corners).unsigned_abs() / 2
    }

    /// Crossing-number test for a single cell centre.
    pub fn encloses_cell(&self, c: Cell) -> bool {
        self.edges()
            .filter(|e| !e.is_horizontal() && e.u().b == c.y && e.u().a > c.x)
            .count()
            % 2
            == 1
    }

    pub fn as_circuit(&self) -> Circuit {
        Circuit {
            corners: self.corners.clone(),
        }
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.corners.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// An edge-simple closed walk; corners may repeat.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Circuit {
    corners: Vec<Corner>,
}

/// Checks a closed corner sequence for unit steps and unrepeated edges.
pub fn validate_circuit(seq: &[Corner]) -> Result<Circuit, PathError> {
    let seq = open_sequence(seq);
    check_steps(seq)?;
    let mut seen = BTreeSet::new();
    for i in 0..seq.len() {
        let edge = GridEdge::new(seq[i], seq[(i + 1) % seq.len()]).expect("steps checked");
        if !seen.insert(edge) {
            return Err(PathError::RepeatedEdge { index: i, edge });
        }
    }
    Ok(Circuit {
        corners: seq.to_vec(),
    })
}

impl Circuit {
    pub(crate) fn from_unchecked(corners: Vec<Corner>) -> Self {
        Self { corners }
    }

    /// Corners in traversal order, without repeating the first.
    pub fn corners(&self) -> &[Corner] {
        &self.corners
    }

    pub fn len(&self) -> usize {
        self.corners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = GridEdge> + '_ {
        let n = self.corners.len();
        (0..n).map(move |i| {
            GridEdge::new(self.corners[i], self.corners[(i + 1) % n])
                .expect("circuit steps are unit")
        })
    }

    /// How often each corner is visited.
    pub fn visits(&self) -> BTreeMap<Corner, usize> {
        let mut m = BTreeMap::new();
        for &c in &self.corners {
            *m.entry(c).or_insert(0) += 1;
        }
        m
    }
}

/// Cells whose centres lie inside `c`.
///
/// A cell `(x, y)` is interior iff an odd number of vertical cycle edges
/// `(a, y)-(a, y + 1)` have `a >= x + 1`.
pub fn interior_cells(c: &Cycle) -> BTreeSet<Cell> {
    let mut crossings: Vec<(i32, i32)> = c
        .edges()
        .filter(|e| !e.is_horizontal())
        .map(|e| (e.u().b, e.u().a))
        .collect();
    crossings.sort_unstable();
    let mut out = BTreeSet::new();
    for pair in crossings.chunks(2) {
        let [(row, from), (row2, to)] = pair else {
            unreachable!("a closed curve crosses each row an even number of times")
        };
        debug_assert_eq!(row, row2);
        out.extend((*from..*to).map(|x| Cell::new(x, *row)));
    }
    out
}

/// Where an edge lies relative to a cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgePosition {
    On,
    Interior,
    Exterior,
}

/// Classifies `e` against `c`. An edge not on `c` has both of its adjacent
/// cells on the same side, so one cell decides.
pub fn edge_position(e: GridEdge, c: &Cycle) -> EdgePosition {
    if c.contains_edge(e) {
        EdgePosition::On
    } else if c.encloses_cell(e.adjacent_cells().0) {
        EdgePosition::Interior
    } else {
        EdgePosition::Exterior
    }
}

/// The corners and edges of a component's cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerGraph {
    vertices: BTreeSet<Corner>,
    edges: BTreeSet<GridEdge>,
    source: Component,
}

pub fn build_corner_graph(comp: &Component) -> CornerGraph {
    let mut vertices = BTreeSet::new();
    let mut edges = BTreeSet::new();
    for &c in comp.cells() {
        vertices.extend(cell_corners(c));
        edges.extend(cell_edges(c));
    }
    CornerGraph {
        vertices,
        edges,
        source: comp.clone(),
    }
}

impl CornerGraph {
    pub fn vertices(&self) -> &BTreeSet<Corner> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<GridEdge> {
        &self.edges
    }

    pub fn source_component(&self) -> &Component {
        &self.source
    }

    /// Endpoints adjacent to `v` through graph edges.
    pub fn neighbors(&self, v: Corner) -> impl Iterator<Item = Corner> + '_ {
        [(1, 0), (0, 1), (-1, 0), (0, -1)]
            .into_iter()
            .map(move |(da, db)| Corner::new(v.a + da, v.b + db))
            .filter(move |&w| GridEdge::new(v, w).is_some_and(|e| self.edges.contains(&e)))
    }

    pub fn is_connected(&self) -> bool {
        let Some(&start) = self.vertices.first() else {
            return true;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = alloc::vec![start];
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == self.vertices.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Adjacency;

    fn corners(list: &[(i32, i32)]) -> Vec<Corner> {
        list.iter().map(|&(a, b)| Corner::new(a, b)).collect()
    }

    fn comp(list: &[(i32, i32)]) -> Component {
        let cells: BTreeSet<Cell> = list.iter().map(|&(x, y)| Cell::new(x, y)).collect();
        let seed = *cells.first().unwrap();
        Component::from_cells(cells, Adjacency::Star, seed)
    }

    fn domino_perimeter() -> Cycle {
        validate_cycle(&corners(&[(0, 0), (1, 0), (2, 0), (2, 1), (1, 1), (0, 1)])).unwrap()
    }

    fn u_perimeter() -> Cycle {
        validate_cycle(&corners(&[
            (0, 0),
            (1, 0),
            (2, 0),
            (3, 0),
            (3, 1),
            (3, 2),
            (2, 2),
            (2, 1),
            (1, 1),
            (1, 2),
            (0, 2),
            (0, 1),
        ]))
        .unwrap()
    }

    #[test]
    fn graph_of_single_cell() {
        let g = build_corner_graph(&comp(&[(0, 0)]));
        assert_eq!(g.vertices().len(), 4);
        assert_eq!(g.edges().len(), 4);
        assert!(g.is_connected());
    }

    #[test]
    fn graph_of_domino_dedups_shared_edge() {
        let g = build_corner_graph(&comp(&[(0, 0), (1, 0)]));
        assert_eq!(g.vertices().len(), 6);
        assert_eq!(g.edges().len(), 7);
        assert!(g.edges().contains(&GridEdge::vertical(1, 0)));
    }

    #[test]
    fn graph_of_diagonal_pair_shares_corner() {
        let g = build_corner_graph(&comp(&[(0, 0), (1, 1)]));
        // 4 + 4 corners with (1,1) counted once.
        assert_eq!(g.vertices().len(), 7);
        assert_eq!(g.edges().len(), 8);
        assert!(g.is_connected());
    }

    #[test]
    fn empty_component_gives_empty_graph() {
        let g = build_corner_graph(&Component::from_cells(
            BTreeSet::new(),
            Adjacency::Star,
            Cell::new(0, 0),
        ));
        assert!(g.vertices().is_empty() && g.edges().is_empty());
    }

    #[test]
    fn edge_separation_formulas() {
        assert_eq!(
            GridEdge::horizontal(2, 3).adjacent_cells(),
            (Cell::new(2, 2), Cell::new(2, 3))
        );
        assert_eq!(
            GridEdge::vertical(2, 3).adjacent_cells(),
            (Cell::new(1, 3), Cell::new(2, 3))
        );
        for e in cell_edges(Cell::new(4, -1)) {
            let (p, q) = e.adjacent_cells();
            assert!(p == Cell::new(4, -1) || q == Cell::new(4, -1));
        }
    }

    #[test]
    fn unit_cycle_validates() {
        let c = validate_cycle(&corners(&[(0, 0), (1, 0), (1, 1), (0, 1)])).unwrap();
        assert_eq!(c, Cycle::unit(Cell::new(0, 0)));
        assert_eq!(c.area(), 1);
    }

    #[test]
    fn canonical_form_is_ccw_from_smallest() {
        let cw = validate_cycle(&corners(&[(1, 1), (1, 0), (0, 0), (0, 1)])).unwrap();
        assert_eq!(
            cw.corners(),
            corners(&[(0, 0), (1, 0), (1, 1), (0, 1)]).as_slice()
        );
        let closed = validate_cycle(&corners(&[(0, 0), (1, 0), (1, 1), (0, 1), (0, 0)])).unwrap();
        assert_eq!(closed, cw);
    }

    #[test]
    fn non_adjacent_step_rejected() {
        let err = validate_cycle(&corners(&[(0, 0), (2, 0), (2, 1), (0, 1)])).unwrap_err();
        assert!(matches!(err, PathError::NonAdjacentStep { index: 0, .. }));
    }

    #[test]
    fn short_sequence_rejected() {
        assert_eq!(
            validate_cycle(&corners(&[(0, 0), (1, 0)])),
            Err(PathError::TooShort(2))
        );
    }

    #[test]
    fn figure_eight_is_circuit_not_cycle() {
        let eight = corners(&[
            (0, 0),
            (1, 0),
            (1, 1),
            (2, 1),
            (2, 2),
            (1, 2),
            (1, 1),
            (0, 1),
        ]);
        assert!(matches!(
            validate_cycle(&eight),
            Err(PathError::RepeatedVertex { index: 6, .. })
        ));
        let circuit = validate_circuit(&eight).unwrap();
        assert_eq!(circuit.edges().count(), 8);
        assert_eq!(circuit.visits()[&Corner::new(1, 1)], 2);
    }

    #[test]
    fn repeated_edge_rejected_for_circuit() {
        let back_and_forth = corners(&[(0, 0), (1, 0), (1, 1), (1, 0), (0, 0), (0, 1)]);
        assert!(matches!(
            validate_circuit(&back_and_forth),
            Err(PathError::RepeatedEdge { .. })
        ));
    }

    #[test]
    fn interior_of_unit_cycle() {
        let c = Cycle::unit(Cell::new(0, 0));
        assert_eq!(interior_cells(&c), BTreeSet::from([Cell::new(0, 0)]));
    }

    #[test]
    fn interior_of_domino() {
        assert_eq!(
            interior_cells(&domino_perimeter()),
            BTreeSet::from([Cell::new(0, 0), Cell::new(1, 0)])
        );
    }

    #[test]
    fn interior_of_u_pentomino_excludes_notch() {
        let c = u_perimeter();
        assert_eq!(c.len(), 12);
        let inside = interior_cells(&c);
        let expected: BTreeSet<Cell> = [(0, 0), (1, 0), (2, 0), (0, 1), (2, 1)]
            .iter()
            .map(|&(x, y)| Cell::new(x, y))
            .collect();
        assert_eq!(inside, expected);
        assert!(!c.encloses_cell(Cell::new(1, 1)));
        assert_eq!(c.area(), 5);
    }

    #[test]
    fn edge_positions() {
        let unit = Cycle::unit(Cell::new(0, 0));
        assert_eq!(
            edge_position(GridEdge::horizontal(0, 0), &unit),
            EdgePosition::On
        );
        assert_eq!(
            edge_position(GridEdge::horizontal(5, 5), &unit),
            EdgePosition::Exterior
        );
        assert_eq!(
            edge_position(GridEdge::vertical(1, 0), &domino_perimeter()),
            EdgePosition::Interior
        );
    }
}
