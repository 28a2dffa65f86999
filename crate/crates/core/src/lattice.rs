//! Unit squares, occupancy grids and connected components.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// One unit square of the tiling.
///
/// Cell `(x, y)` is the closed square `[x - 1/2, x + 1/2] × [y - 1/2, y + 1/2]`,
/// so the origin sits at the centre of cell `(0, 0)`.
///
/// Cells are ordered lexicographically by `(y, x)`. The rank of a cell under
/// this order inside a finite set is its *index*, which drives the leaf
/// tie-break of the outer circuit construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cell {
    pub x: i32,
    pub y: i32,
}

impl Cell {
    pub const fn new(x: i32, y: i32) -> Self {
        Self { x, y }
    }

    pub const fn offset(self, dx: i32, dy: i32) -> Self {
        Self::new(self.x + dx, self.y + dy)
    }
}

impl Ord for Cell {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.y, self.x).cmp(&(other.y, other.x))
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Which squares count as neighbours.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Adjacency {
    /// Squares sharing at least a corner (8 neighbours).
    Star,
    /// Squares sharing an edge (4 neighbours).
    Plus,
}

// Offsets already sorted by (dy, dx).
const STAR_OFFSETS: [(i32, i32); 8] = [
    (-1, -1),
    (0, -1),
    (1, -1),
    (-1, 0),
    (1, 0),
    (-1, 1),
    (0, 1),
    (1, 1),
];
const PLUS_OFFSETS: [(i32, i32); 4] = [(0, -1), (-1, 0), (1, 0), (0, 1)];

impl Adjacency {
    pub(crate) fn offsets(self) -> &'static [(i32, i32)] {
        match self {
            Adjacency::Star => &STAR_OFFSETS,
            Adjacency::Plus => &PLUS_OFFSETS,
        }
    }

    pub fn are_adjacent(self, a: Cell, b: Cell) -> bool {
        let dx = (a.x - b.x).abs();
        let dy = (a.y - b.y).abs();
        match self {
            Adjacency::Star => dx.max(dy) == 1,
            Adjacency::Plus => dx + dy == 1,
        }
    }
}

/// Neighbours of `c` under `kind`, sorted by `(y, x)`.
pub fn neighbors(c: Cell, kind: Adjacency) -> Vec<Cell> {
    kind.offsets()
        .iter()
        .map(|&(dx, dy)| c.offset(dx, dy))
        .collect()
}

/// Inclusive axis-aligned rectangle of cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Window {
    pub x_min: i32,
    pub x_max: i32,
    pub y_min: i32,
    pub y_max: i32,
}

impl Window {
    pub fn new(x_min: i32, x_max: i32, y_min: i32, y_max: i32) -> Result<Self, LatticeError> {
        if x_min > x_max || y_min > y_max {
            return Err(LatticeError::EmptyWindow);
        }
        Ok(Self {
            x_min,
            x_max,
            y_min,
            y_max,
        })
    }

    /// `width × height` window with its lower-left cell at the origin.
    pub fn sized(width: u32, height: u32) -> Result<Self, LatticeError> {
        if width == 0 || height == 0 {
            return Err(LatticeError::EmptyWindow);
        }
        Self::new(0, width as i32 - 1, 0, height as i32 - 1)
    }

    pub fn width(&self) -> usize {
        (self.x_max - self.x_min + 1) as usize
    }

    pub fn height(&self) -> usize {
        (self.y_max - self.y_min + 1) as usize
    }

    pub fn len(&self) -> usize {
        self.width() * self.height()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, c: Cell) -> bool {
        (self.x_min..=self.x_max).contains(&c.x) && (self.y_min..=self.y_max).contains(&c.y)
    }

    /// Row-major index with the bottom row first.
    pub fn index_of(&self, c: Cell) -> Option<usize> {
        self.contains(c)
            .then(|| (c.y - self.y_min) as usize * self.width() + (c.x - self.x_min) as usize)
    }

    pub fn cell_at(&self, index: usize) -> Cell {
        let w = self.width();
        Cell::new(
            self.x_min + (index % w) as i32,
            self.y_min + (index / w) as i32,
        )
    }

    /// All cells in `(y, x)` order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.len()).map(|i| self.cell_at(i))
    }

    /// The window grown by `margin` cells on every side.
    pub fn expanded(&self, margin: i32) -> Self {
        Self {
            x_min: self.x_min - margin,
            x_max: self.x_max + margin,
            y_min: self.y_min - margin,
            y_max: self.y_max + margin,
        }
    }

    /// Smallest window holding every cell, or `None` for no cells.
    pub fn bounding<'a>(cells: impl IntoIterator<Item = &'a Cell>) -> Option<Self> {
        let mut it = cells.into_iter();
        let first = it.next()?;
        let mut w = Self {
            x_min: first.x,
            x_max: first.x,
            y_min: first.y,
            y_max: first.y,
        };
        for c in it {
            w.x_min = w.x_min.min(c.x);
            w.x_max = w.x_max.max(c.x);
            w.y_min = w.y_min.min(c.y);
            w.y_max = w.y_max.max(c.y);
        }
        Some(w)
    }
}

/// Occupancy of every cell in a window. Cells outside the window are vacant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Grid {
    window: Window,
    occupied: Vec<bool>,
}

impl Grid {
    pub fn vacant(window: Window) -> Self {
        Self {
            window,
            occupied: vec![false; window.len()],
        }
    }

    /// Occupancy given row-major from the bottom row, see [`Window::index_of`].
    pub fn from_occupancy(window: Window, occupied: Vec<bool>) -> Result<Self, LatticeError> {
        if occupied.len() != window.len() {
            return Err(LatticeError::OccupancyLength {
                expected: window.len(),
                found: occupied.len(),
            });
        }
        Ok(Self { window, occupied })
    }

    pub fn from_cells<'a>(
        window: Window,
        cells: impl IntoIterator<Item = &'a Cell>,
    ) -> Result<Self, LatticeError> {
        let mut g = Self::vacant(window);
        for &c in cells {
            g.set(c, true)?;
        }
        Ok(g)
    }

    /// Decodes bit `i` of `mask` as the occupancy of `window.cell_at(i)`.
    pub fn from_bitmask(window: Window, mask: u64) -> Result<Self, LatticeError> {
        if window.len() > 64 {
            return Err(LatticeError::BitmaskTooSmall(window.len()));
        }
        let occupied = (0..window.len()).map(|i| mask >> i & 1 == 1).collect();
        Ok(Self { window, occupied })
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn is_occupied(&self, c: Cell) -> bool {
        self.window.index_of(c).is_some_and(|i| self.occupied[i])
    }

    pub fn set(&mut self, c: Cell, occupied: bool) -> Result<(), LatticeError> {
        let i = self
            .window
            .index_of(c)
            .ok_or(LatticeError::OutsideWindow(c))?;
        self.occupied[i] = occupied;
        Ok(())
    }

    pub fn occupied_cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.window.cells().filter(|&c| self.is_occupied(c))
    }
}

/// A set of occupied cells connected under one adjacency relation.
///
/// [`component`] produces maximal connected sets. [`Component::from_cells`]
/// wraps an arbitrary cell set without checking, which the oracle uses to
/// treat a rasterized region as if it were a component.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Component {
    cells: BTreeSet<Cell>,
    kind: Adjacency,
    seed: Cell,
}

impl Component {
    pub fn from_cells(cells: BTreeSet<Cell>, kind: Adjacency, seed: Cell) -> Self {
        Self { cells, kind, seed }
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn kind(&self) -> Adjacency {
        self.kind
    }

    pub fn seed(&self) -> Cell {
        self.seed
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.contains(&c)
    }

    /// Rank of `c` under the `(y, x)` order, if it belongs to the component.
    pub fn index_of(&self, c: Cell) -> Option<usize> {
        self.contains(c).then(|| self.cells.range(..c).count())
    }
}

/// The maximal `kind`-connected occupied set containing `seed`, or `None`
/// when the seed is vacant.
pub fn component(g: &Grid, seed: Cell, kind: Adjacency) -> Result<Option<Component>, LatticeError> {
    if !g.window.contains(seed) {
        return Err(LatticeError::OutsideWindow(seed));
    }
    if !g.is_occupied(seed) {
        return Ok(None);
    }
    let mut cells = BTreeSet::new();
    let mut queue = VecDeque::new();
    cells.insert(seed);
    queue.push_back(seed);
    while let Some(c) = queue.pop_front() {
        for &(dx, dy) in kind.offsets() {
            let n = c.offset(dx, dy);
            if g.is_occupied(n) && cells.insert(n) {
                queue.push_back(n);
            }
        }
    }
    Ok(Some(Component { cells, kind, seed }))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("cell {0} lies outside the window")]
    OutsideWindow(Cell),
    #[error("window has no cells")]
    EmptyWindow,
    #[error("occupancy has {found} entries, window needs {expected}")]
    OccupancyLength { expected: usize, found: usize },
    #[error("window of {0} cells does not fit a 64-bit mask")]
    BitmaskTooSmall(usize),
}
