//! Outermost boundaries of occupied components on the unit-square tiling.
//!
//! The plane is tiled by unit squares centred on integer points. Every square
//! is either occupied or vacant. Two squares are *star*-adjacent when they
//! share a corner and *plus*-adjacent when they share an edge.
//!
//! For a finite star-connected occupied component this crate computes its
//! outermost boundary: a set of vertex-simple cycles with pairwise disjoint
//! interiors, any two of which meet in at most one corner. The cycles form a
//! tree under corner sharing, and splicing them leaf by leaf produces a single
//! edge-simple circuit covering every boundary edge. For plus-connected
//! components the outermost boundary is a single cycle.
//!
//! Modules:
//!
//! - [`lattice`]: cells, windows, occupancy grids, adjacency and components.
//! - [`cornergraph`]: corners, grid edges, cycles, circuits and the
//!   interior/exterior predicates.
//! - [`cyclemerge`]: merging two cycles that share more than one corner into
//!   the innermost cycle enclosing both.
//! - [`boundary`]: the outermost boundary decomposition, cycle tree and
//!   outer circuit.
//! - [`oracle`]: brute-force validators used by tests and the `check` command.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod boundary;
pub mod cornergraph;
pub mod cyclemerge;
pub mod lattice;
pub mod oracle;
pub mod report;

pub use boundary::{
    boundary_edges, cycle_tree, decompose_into_cycles, euler_circuit, outermost_boundary,
    outermost_cycle_for_cell, plus_outermost, BoundaryDecomposition, BoundaryError, CycleTree,
    TreeEdge,
};
pub use cornergraph::{
    build_corner_graph, edge_position, interior_cells, validate_circuit, validate_cycle, Circuit,
    Corner, CornerGraph, Cycle, EdgePosition, GridEdge, PathError,
};
pub use cyclemerge::{
    merge, merge_invariants_check, MergeError, MergeIteration, MergeReport, MergeTrace, SpliceSide,
};
pub use lattice::{component, neighbors, Adjacency, Cell, Component, Grid, LatticeError, Window};
pub use report::{PropertyCheck, Report};
