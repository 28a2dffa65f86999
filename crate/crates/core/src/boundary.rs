//! The outermost boundary of a component.
//!
//! An edge of a star component is on the outermost boundary iff one side is
//! a cell of the component and the other is a vacant cell that can reach
//! infinity by edge-steps through vacant cells. Those edges split into
//! vertex-simple cycles: at a corner where four boundary edges meet, the two
//! occupied cells around it are diagonal and each edge pairs with the other
//! edge of the same occupied cell. Cycles sharing a corner form a tree, and
//! peeling leaves off that tree yields one circuit through every edge.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::cornergraph::{
    cell_edges, interior_cells, signed_area2, validate_cycle, Circuit, Corner, Cycle, GridEdge,
    PathError,
};
use crate::lattice::{Cell, Component, Window};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoundaryError {
    #[error("cell {0} is not in the component")]
    CellNotInComponent(Cell),
    #[error("component is empty")]
    EmptyComponent,
    #[error("edge {0} does not separate the component from a vacant cell")]
    NotABoundaryEdge(GridEdge),
    #[error("corner {corner} has boundary degree {degree}")]
    BadDegree { corner: Corner, degree: usize },
    #[error("corner {0} has unequal numbers of incoming and outgoing boundary edges")]
    Unbalanced(Corner),
    #[error("occupied cells around degree-4 corner {0} are not diagonal")]
    NonDiagonalCrossing(Corner),
    #[error("traced boundary is not a simple cycle: {0}")]
    TraceNotSimple(PathError),
    #[error("traced boundary through {0} runs clockwise")]
    ClockwiseTrace(Corner),
    #[error("corner {0} is shared by three or more cycles")]
    CrowdedCorner(Corner),
    #[error("cycle graph with {nodes} nodes and {edges} edges is not a tree")]
    NotATree { nodes: usize, edges: usize },
    #[error("plus component has {0} outermost cycles, expected exactly 1")]
    NotSingleCycle(usize),
}

/// Cells of the component as a dense mask over its bounding box grown by one.
struct Raster {
    window: Window,
    occupied: Vec<bool>,
}

impl Raster {
    fn new(comp: &Component) -> Option<Self> {
        let window = Window::bounding(comp.cells())?.expanded(1);
        let mut occupied = vec![false; window.len()];
        for &c in comp.cells() {
            occupied[window.index_of(c).expect("cell inside its bounding box")] = true;
        }
        Some(Self { window, occupied })
    }

    /// Vacant cells reachable from outside through edge-adjacent vacant cells.
    /// The outer ring of the raster is vacant, so flooding from it suffices.
    fn exterior(&self) -> Vec<bool> {
        let w = &self.window;
        let mut reached = vec![false; w.len()];
        let mut queue = VecDeque::new();
        for c in w.cells() {
            let on_rim = c.x == w.x_min || c.x == w.x_max || c.y == w.y_min || c.y == w.y_max;
            if on_rim {
                let i = w.index_of(c).expect("rim cell inside window");
                reached[i] = true;
                queue.push_back(c);
            }
        }
        while let Some(c) = queue.pop_front() {
            for n in [
                c.offset(0, -1),
                c.offset(-1, 0),
                c.offset(1, 0),
                c.offset(0, 1),
            ] {
                if let Some(i) = w.index_of(n) {
                    if !self.occupied[i] && !reached[i] {
                        reached[i] = true;
                        queue.push_back(n);
                    }
                }
            }
        }
        reached
    }
}

/// Edges with a component cell on one side and an exterior vacant cell on
/// the other. Edges facing enclosed holes are excluded.
pub fn boundary_edges(comp: &Component) -> BTreeSet<GridEdge> {
    let Some(raster) = Raster::new(comp) else {
        return BTreeSet::new();
    };
    let exterior = raster.exterior();
    let is_exterior = |c: Cell| raster.window.index_of(c).is_some_and(|i| exterior[i]);
    let mut out = BTreeSet::new();
    for &c in comp.cells() {
        let [bottom, right, top, left] = cell_edges(c);
        for (edge, across) in [
            (bottom, c.offset(0, -1)),
            (right, c.offset(1, 0)),
            (top, c.offset(0, 1)),
            (left, c.offset(-1, 0)),
        ] {
            if is_exterior(across) {
                out.insert(edge);
            }
        }
    }
    out
}

/// The edge oriented so that the component cell lies on its left.
fn orient(e: GridEdge, comp: &Component) -> Result<(Corner, Corner), BoundaryError> {
    let (low, high) = e.adjacent_cells();
    let (u, v) = (e.u(), e.v());
    match (comp.contains(low), comp.contains(high)) {
        // Horizontal: `high` is above, so run +x. Vertical: `high` is to the
        // right, so run -y.
        (false, true) if e.is_horizontal() => Ok((u, v)),
        (false, true) => Ok((v, u)),
        (true, false) if e.is_horizontal() => Ok((v, u)),
        (true, false) => Ok((u, v)),
        _ => Err(BoundaryError::NotABoundaryEdge(e)),
    }
}

/// Splits outermost boundary edges into vertex-simple cycles.
///
/// Cycles come back canonical and sorted by their smallest corner.
pub fn decompose_into_cycles(
    edges: &BTreeSet<GridEdge>,
    comp: &Component,
) -> Result<Vec<Cycle>, BoundaryError> {
    let mut outgoing: BTreeMap<Corner, Vec<Corner>> = BTreeMap::new();
    let mut degree: BTreeMap<Corner, usize> = BTreeMap::new();
    let mut directed = Vec::with_capacity(edges.len());
    for &e in edges {
        let (from, to) = orient(e, comp)?;
        outgoing.entry(from).or_default().push(to);
        *degree.entry(from).or_default() += 1;
        *degree.entry(to).or_default() += 1;
        directed.push((from, to));
    }
    for (&corner, &d) in &degree {
        if outgoing.get(&corner).map_or(0, Vec::len) * 2 != d {
            return Err(BoundaryError::Unbalanced(corner));
        }
        match d {
            2 => {}
            4 => {
                let [ll, lr, ul, ur] = corner.cells_around().map(|c| comp.contains(c));
                let diagonal = (ll && ur && !lr && !ul) || (lr && ul && !ll && !ur);
                if !diagonal {
                    return Err(BoundaryError::NonDiagonalCrossing(corner));
                }
            }
            _ => return Err(BoundaryError::BadDegree { corner, degree: d }),
        }
    }

    let mut used: BTreeSet<(Corner, Corner)> = BTreeSet::new();
    let mut cycles = Vec::new();
    for &start in &directed {
        if used.contains(&start) {
            continue;
        }
        let mut seq = Vec::new();
        let (mut from, mut to) = start;
        loop {
            used.insert((from, to));
            seq.push(from);
            let (dx, dy) = (to.a - from.a, to.b - from.b);
            // Left turn first keeps hugging the same occupied cell.
            let turns = [(-dy, dx), (dx, dy), (dy, -dx)];
            let next = turns
                .iter()
                .map(|&(ta, tb)| Corner::new(to.a + ta, to.b + tb))
                .find(|n| outgoing[&to].contains(n))
                .expect("every boundary corner has an outgoing edge");
            (from, to) = (to, next);
            if (from, to) == start {
                break;
            }
        }
        if signed_area2(&seq) <= 0 {
            return Err(BoundaryError::ClockwiseTrace(seq[0]));
        }
        cycles.push(validate_cycle(&seq).map_err(BoundaryError::TraceNotSimple)?);
    }
    cycles.sort();
    Ok(cycles)
}

/// One edge of the cycle tree: two cycles and the corner they share.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeEdge {
    pub a: usize,
    pub b: usize,
    pub corner: Corner,
}

/// Graph on cycle indices joining cycles that share a corner.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CycleTree {
    nodes: usize,
    edges: Vec<TreeEdge>,
}

impl CycleTree {
    /// Builds the graph without asserting that it is a tree.
    pub fn from_edges(nodes: usize, mut edges: Vec<TreeEdge>) -> Self {
        edges.sort();
        Self { nodes, edges }
    }

    pub fn node_count(&self) -> usize {
        self.nodes
    }

    pub fn edges(&self) -> &[TreeEdge] {
        &self.edges
    }

    /// Neighbouring nodes of `i` with the shared corner.
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = (usize, Corner)> + '_ {
        self.edges.iter().filter_map(move |e| {
            if e.a == i {
                Some((e.b, e.corner))
            } else if e.b == i {
                Some((e.a, e.corner))
            } else {
                None
            }
        })
    }

    pub fn is_connected(&self) -> bool {
        if self.nodes == 0 {
            return true;
        }
        let mut seen = vec![false; self.nodes];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for (j, _) in self.neighbors(i) {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.nodes.max(1) && self.is_connected()
    }

    /// Longest edge distance from `root` to any node.
    pub fn depth_from(&self, root: usize) -> usize {
        if root >= self.nodes {
            return 0;
        }
        let mut dist = vec![usize::MAX; self.nodes];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        let mut deepest = 0;
        while let Some(i) = queue.pop_front() {
            deepest = deepest.max(dist[i]);
            for (j, _) in self.neighbors(i) {
                if dist[j] == usize::MAX {
                    dist[j] = dist[i] + 1;
                    queue.push_back(j);
                }
            }
        }
        deepest
    }
}

/// Joins every pair of cycles that share a corner and checks that the result
/// is a tree with at most two cycles at any corner.
pub fn cycle_tree(cycles: &[Cycle]) -> Result<CycleTree, BoundaryError> {
    let mut at_corner: BTreeMap<Corner, Vec<usize>> = BTreeMap::new();
    for (i, c) in cycles.iter().enumerate() {
        for &corner in c.corners() {
            at_corner.entry(corner).or_default().push(i);
        }
    }
    let mut edges = Vec::new();
    for (corner, owners) in at_corner {
        match owners[..] {
            [_] => {}
            [a, b] => edges.push(TreeEdge { a, b, corner }),
            _ => return Err(BoundaryError::CrowdedCorner(corner)),
        }
    }
    let tree = CycleTree::from_edges(cycles.len(), edges);
    if !tree.is_tree() {
        return Err(BoundaryError::NotATree {
            nodes: tree.nodes,
            edges: tree.edges.len(),
        });
    }
    Ok(tree)
}

/// Smallest component cell inside each cycle.
fn least_cells(cycles: &[Cycle], comp: &Component) -> Vec<Option<Cell>> {
    cycles
        .iter()
        .map(|c| {
            interior_cells(c)
                .into_iter()
                .find(|&cell| comp.contains(cell))
        })
        .collect()
}

/// A single circuit through every edge of every cycle.
///
/// Repeatedly removes the leaf whose cycle holds the smallest component
/// cell, builds the circuit of what remains, then splices the leaf cycle in
/// at the corner it shares with the rest.
pub fn euler_circuit(tree: &CycleTree, cycles: &[Cycle], comp: &Component) -> Circuit {
    if cycles.is_empty() {
        return Circuit::from_unchecked(Vec::new());
    }
    let keys = least_cells(cycles, comp);
    let mut alive = vec![true; cycles.len()];
    let mut degree: Vec<usize> = (0..cycles.len())
        .map(|i| tree.neighbors(i).count())
        .collect();
    let mut peeled = Vec::with_capacity(cycles.len() - 1);
    for _ in 1..cycles.len() {
        let leaf = (0..cycles.len())
            .filter(|&i| alive[i] && degree[i] == 1)
            .min_by_key(|&i| (keys[i].is_none(), keys[i], i))
            .expect("a tree with two or more nodes has a leaf");
        let (parent, corner) = tree
            .neighbors(leaf)
            .find(|&(j, _)| alive[j])
            .expect("a leaf has one live neighbour");
        alive[leaf] = false;
        degree[leaf] = 0;
        degree[parent] -= 1;
        peeled.push((leaf, corner));
    }
    let root = alive.iter().position(|&a| a).expect("one node survives");

    let mut circuit: Vec<Corner> = cycles[root].corners().to_vec();
    for &(leaf, corner) in peeled.iter().rev() {
        let at = circuit
            .iter()
            .position(|&c| c == corner)
            .expect("shared corner is on the circuit");
        circuit.rotate_left(at);
        let d = cycles[leaf].corners();
        let t = d
            .iter()
            .position(|&c| c == corner)
            .expect("shared corner is on the leaf");
        let mut next = Vec::with_capacity(circuit.len() + d.len());
        next.extend_from_slice(&d[..=t]);
        next.extend_from_slice(&circuit[1..]);
        next.push(circuit[0]);
        next.extend_from_slice(&d[t + 1..]);
        circuit = next;
    }
    Circuit::from_unchecked(circuit)
}

/// Outermost boundary cycles of a star component with their tree and circuit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryDecomposition {
    pub cycles: Vec<Cycle>,
    /// Index of the cycle whose interior holds each component cell.
    pub cell_to_cycle: BTreeMap<Cell, usize>,
    pub tree: CycleTree,
    pub circuit: Circuit,
}

impl Default for BoundaryDecomposition {
    fn default() -> Self {
        Self {
            cycles: Vec::new(),
            cell_to_cycle: BTreeMap::new(),
            tree: CycleTree::default(),
            circuit: Circuit::from_unchecked(Vec::new()),
        }
    }
}

impl BoundaryDecomposition {
    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.cycles.iter().map(Cycle::len).sum()
    }

    pub fn edges(&self) -> BTreeSet<GridEdge> {
        self.cycles.iter().flat_map(|c| c.edges()).collect()
    }

    pub fn cycle_containing(&self, cell: Cell) -> Option<&Cycle> {
        self.cell_to_cycle.get(&cell).map(|&i| &self.cycles[i])
    }
}

/// Computes the full decomposition. An empty component gives an empty one.
pub fn outermost_boundary(comp: &Component) -> Result<BoundaryDecomposition, BoundaryError> {
    if comp.is_empty() {
        return Ok(BoundaryDecomposition::default());
    }
    let edges = boundary_edges(comp);
    let cycles = decompose_into_cycles(&edges, comp)?;
    let mut cell_to_cycle = BTreeMap::new();
    for (i, c) in cycles.iter().enumerate() {
        for cell in interior_cells(c) {
            if comp.contains(cell) {
                cell_to_cycle.insert(cell, i);
            }
        }
    }
    let tree = cycle_tree(&cycles)?;
    let circuit = euler_circuit(&tree, &cycles, comp);
    let decomposition = BoundaryDecomposition {
        cycles,
        cell_to_cycle,
        tree,
        circuit,
    };
    debug_assert!(
        crate::oracle::check_decomposition(comp, &decomposition).all_passed(),
        "decomposition invariants failed: {:?}",
        crate::oracle::check_decomposition(comp, &decomposition)
            .failures()
            .collect::<Vec<_>>()
    );
    Ok(decomposition)
}

/// The outermost cycle whose interior contains `k`.
pub fn outermost_cycle_for_cell(comp: &Component, k: Cell) -> Result<Cycle, BoundaryError> {
    if !comp.contains(k) {
        return Err(BoundaryError::CellNotInComponent(k));
    }
    let mut d = outermost_boundary(comp)?;
    let i = d.cell_to_cycle[&k];
    Ok(d.cycles.swap_remove(i))
}

/// The single outermost cycle of a plus component.
pub fn plus_outermost(comp: &Component) -> Result<Cycle, BoundaryError> {
    if comp.is_empty() {
        return Err(BoundaryError::EmptyComponent);
    }
    let mut cycles = decompose_into_cycles(&boundary_edges(comp), comp)?;
    if cycles.len() != 1 {
        return Err(BoundaryError::NotSingleCycle(cycles.len()));
    }
    Ok(cycles.remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Adjacency;

    fn comp(list: &[(i32, i32)]) -> Component {
        let cells: BTreeSet<Cell> = list.iter().map(|&(x, y)| Cell::new(x, y)).collect();
        let seed = *cells.first().unwrap();
        Component::from_cells(cells, Adjacency::Star, seed)
    }

    const U: [(i32, i32); 5] = [(0, 0), (1, 0), (2, 0), (0, 1), (2, 1)];

    #[test]
    fn single_cell_edges() {
        let c = comp(&[(0, 0)]);
        assert_eq!(
            boundary_edges(&c),
            cell_edges(Cell::new(0, 0)).into_iter().collect()
        );
    }

    #[test]
    fn domino_excludes_shared_edge() {
        let e = boundary_edges(&comp(&[(0, 0), (1, 0)]));
        assert_eq!(e.len(), 6);
        assert!(!e.contains(&GridEdge::vertical(1, 0)));
    }

    #[test]
    fn ring_excludes_hole_edges() {
        let ring: Vec<(i32, i32)> = (-1..=1)
            .flat_map(|y| (-1..=1).map(move |x| (x, y)))
            .filter(|&p| p != (0, 0))
            .collect();
        let e = boundary_edges(&comp(&ring));
        assert_eq!(e.len(), 12);
        for hole_edge in cell_edges(Cell::new(0, 0)) {
            assert!(!e.contains(&hole_edge));
        }
    }

    #[test]
    fn single_cell_decomposes_to_unit_cycle() {
        let c = comp(&[(0, 0)]);
        let cycles = decompose_into_cycles(&boundary_edges(&c), &c).unwrap();
        assert_eq!(cycles, vec![Cycle::unit(Cell::new(0, 0))]);
    }

    #[test]
    fn diagonal_pair_splits_at_corner() {
        let c = comp(&[(0, 0), (1, 1)]);
        let cycles = decompose_into_cycles(&boundary_edges(&c), &c).unwrap();
        assert_eq!(
            cycles,
            vec![Cycle::unit(Cell::new(0, 0)), Cycle::unit(Cell::new(1, 1))]
        );
    }

    #[test]
    fn diagonal_chain_gives_three_units() {
        let c = comp(&[(0, 0), (1, 1), (2, 2)]);
        let cycles = decompose_into_cycles(&boundary_edges(&c), &c).unwrap();
        assert_eq!(cycles.len(), 3);
        assert!(cycles[0].contains_corner(Corner::new(1, 1)));
        assert!(cycles[1].contains_corner(Corner::new(1, 1)));
        assert!(cycles[1].contains_corner(Corner::new(2, 2)));
        assert!(cycles[2].contains_corner(Corner::new(2, 2)));
    }

    #[test]
    fn edges_without_a_vacant_side_are_rejected() {
        let c = comp(&[(0, 0)]);
        let mut edges = boundary_edges(&c);
        edges.extend(cell_edges(Cell::new(3, 3)));
        assert!(matches!(
            decompose_into_cycles(&edges, &c),
            Err(BoundaryError::NotABoundaryEdge(_))
        ));
        let domino = comp(&[(0, 0), (1, 0)]);
        let mut edges = boundary_edges(&domino);
        edges.insert(GridEdge::vertical(1, 0));
        assert_eq!(
            decompose_into_cycles(&edges, &domino),
            Err(BoundaryError::NotABoundaryEdge(GridEdge::vertical(1, 0)))
        );
    }

    #[test]
    fn decomposition_of_single_cell() {
        let c = comp(&[(0, 0)]);
        let d = outermost_boundary(&c).unwrap();
        assert_eq!(d.cycles.len(), 1);
        assert_eq!(d.tree.node_count(), 1);
        assert!(d.tree.edges().is_empty());
        assert_eq!(d.circuit, d.cycles[0].as_circuit());
    }

    #[test]
    fn decomposition_of_diagonal_pair() {
        let d = outermost_boundary(&comp(&[(0, 0), (1, 1)])).unwrap();
        assert_eq!(d.cycles.len(), 2);
        assert_eq!(
            d.tree.edges(),
            &[TreeEdge {
                a: 0,
                b: 1,
                corner: Corner::new(1, 1)
            }]
        );
        assert_eq!(d.circuit.edges().count(), 8);
        let visits = d.circuit.visits();
        assert_eq!(visits[&Corner::new(1, 1)], 2);
        assert!(visits
            .iter()
            .all(|(&c, &n)| c == Corner::new(1, 1) || n == 1));
    }

    #[test]
    fn circuit_splices_leaf_at_shared_corner() {
        // Cell (0,0) has the smallest index, so its cycle is peeled first and
        // spliced last: the circuit starts on that unit cycle.
        let d = outermost_boundary(&comp(&[(0, 0), (1, 1)])).unwrap();
        let expected: Vec<Corner> = [
            (0, 0),
            (1, 0),
            (1, 1),
            (2, 1),
            (2, 2),
            (1, 2),
            (1, 1),
            (0, 1),
        ]
        .iter()
        .map(|&(a, b)| Corner::new(a, b))
        .collect();
        assert_eq!(d.circuit.corners(), expected.as_slice());
    }

    #[test]
    fn diagonal_chain_tree_is_a_path() {
        let d = outermost_boundary(&comp(&[(0, 0), (1, 1), (2, 2)])).unwrap();
        assert_eq!(d.tree.edges().len(), 2);
        assert_eq!(d.tree.depth_from(0), 2);
        assert_eq!(d.tree.depth_from(1), 1);
        assert_eq!(d.circuit.edges().count(), 12);
        let doubled: Vec<Corner> = d
            .circuit
            .visits()
            .into_iter()
            .filter(|&(_, n)| n == 2)
            .map(|(c, _)| c)
            .collect();
        assert_eq!(doubled, vec![Corner::new(1, 1), Corner::new(2, 2)]);
    }

    #[test]
    fn empty_component_gives_empty_decomposition() {
        let c = Component::from_cells(BTreeSet::new(), Adjacency::Star, Cell::new(0, 0));
        let d = outermost_boundary(&c).unwrap();
        assert!(d.is_empty());
        assert!(d.circuit.is_empty());
        assert_eq!(plus_outermost(&c), Err(BoundaryError::EmptyComponent));
    }

    #[test]
    fn outermost_cycle_lookup() {
        let pair = comp(&[(0, 0), (1, 1)]);
        assert_eq!(
            outermost_cycle_for_cell(&pair, Cell::new(1, 1)).unwrap(),
            Cycle::unit(Cell::new(1, 1))
        );
        assert_eq!(
            outermost_cycle_for_cell(&pair, Cell::new(5, 5)),
            Err(BoundaryError::CellNotInComponent(Cell::new(5, 5)))
        );
        let u = comp(&U);
        let first = outermost_cycle_for_cell(&u, Cell::new(0, 0)).unwrap();
        assert_eq!(first.len(), 12);
        for &(x, y) in &U {
            assert_eq!(
                outermost_cycle_for_cell(&u, Cell::new(x, y)).unwrap(),
                first
            );
        }
    }

    #[test]
    fn plus_outermost_fixtures() {
        let plus = |cells: &[(i32, i32)]| {
            let s: BTreeSet<Cell> = cells.iter().map(|&(x, y)| Cell::new(x, y)).collect();
            Component::from_cells(s, Adjacency::Plus, Cell::new(0, 0))
        };
        assert_eq!(plus_outermost(&plus(&[(0, 0)])).unwrap().len(), 4);
        assert_eq!(plus_outermost(&plus(&[(0, 0), (1, 0)])).unwrap().len(), 6);
        let u = plus_outermost(&plus(&U)).unwrap();
        assert_eq!(u.len(), 12);
        assert_eq!(interior_cells(&u).len(), 5);
    }

    #[test]
    fn tree_rejects_double_contact() {
        // Two unit cycles sharing an edge share two corners: not a tree.
        let cycles = [Cycle::unit(Cell::new(0, 0)), Cycle::unit(Cell::new(1, 0))];
        assert!(matches!(
            cycle_tree(&cycles),
            Err(BoundaryError::NotATree { nodes: 2, edges: 2 })
        ));
    }

    #[test]
    fn tree_rejects_crowded_corner() {
        let cycles = [
            Cycle::unit(Cell::new(0, 0)),
            Cycle::unit(Cell::new(1, 1)),
            Cycle::unit(Cell::new(0, 1)),
        ];
        assert_eq!(
            cycle_tree(&cycles),
            Err(BoundaryError::CrowdedCorner(Corner::new(1, 1)))
        );
    }
}
