//! Cells, boards, and the two containers built from them: ordered paths and
//! unordered sets.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// An integer lattice point `(x, y)`: `x` is the column, `y` the row.
///
/// Cells order by `(y, x)`, which is the row-major order used for every
/// canonical encoding in the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Cell {
    pub x: i32,
    pub y: i32,
}

impl Cell {
    pub const fn new(x: i32, y: i32) -> Self {
        Cell { x, y }
    }

    /// Both coordinates even.
    pub fn is_even(self) -> bool {
        self.x.rem_euclid(2) == 0 && self.y.rem_euclid(2) == 0
    }

    /// Both coordinates odd.
    pub fn is_odd(self) -> bool {
        self.x.rem_euclid(2) == 1 && self.y.rem_euclid(2) == 1
    }

    /// Halves both coordinates; `None` unless both are even.
    pub fn halved(self) -> Option<Cell> {
        self.is_even().then(|| Cell::new(self.x / 2, self.y / 2))
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

impl From<(i32, i32)> for Cell {
    fn from((x, y): (i32, i32)) -> Self {
        Cell { x, y }
    }
}

impl Add for Cell {
    type Output = Cell;
    fn add(self, rhs: Cell) -> Cell {
        Cell::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Cell {
    type Output = Cell;
    fn sub(self, rhs: Cell) -> Cell {
        Cell::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for Cell {
    type Output = Cell;
    fn neg(self) -> Cell {
        Cell::new(-self.x, -self.y)
    }
}

impl Mul<Cell> for i32 {
    type Output = Cell;
    fn mul(self, rhs: Cell) -> Cell {
        Cell::new(self * rhs.x, self * rhs.y)
    }
}

/// A rectangular board `origin + [0; width-1] x [0; height-1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Board {
    width: u32,
    height: u32,
    origin: Cell,
}

impl Board {
    /// Board with `height` rows (`m`) and `width` columns (`n`) at the origin.
    pub fn new(height: u32, width: u32) -> Result<Self> {
        Self::with_origin(height, width, Cell::default())
    }

    pub fn square(side: u32) -> Result<Self> {
        Self::new(side, side)
    }

    pub fn with_origin(height: u32, width: u32, origin: Cell) -> Result<Self> {
        if height == 0 || width == 0 {
            return Err(Error::InvalidParameter(format!(
                "board dimensions must be positive, got {height}x{width}"
            )));
        }
        Ok(Board {
            width,
            height,
            origin,
        })
    }

    /// Smallest board containing every given cell.
    pub fn bounding<'a>(cells: impl IntoIterator<Item = &'a Cell>) -> Option<Board> {
        let mut it = cells.into_iter();
        let first = *it.next()?;
        let (mut lo, mut hi) = (first, first);
        for c in it {
            lo = Cell::new(lo.x.min(c.x), lo.y.min(c.y));
            hi = Cell::new(hi.x.max(c.x), hi.y.max(c.y));
        }
        Some(Board {
            width: (hi.x - lo.x + 1) as u32,
            height: (hi.y - lo.y + 1) as u32,
            origin: lo,
        })
    }

    /// Number of columns (`n`).
    pub fn width(&self) -> u32 {
        self.width
    }

    /// Number of rows (`m`).
    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn origin(&self) -> Cell {
        self.origin
    }

    pub fn is_square(&self) -> bool {
        self.width == self.height
    }

    pub fn area(&self) -> usize {
        self.width as usize * self.height as usize
    }

    pub fn contains(&self, c: Cell) -> bool {
        let d = c - self.origin;
        d.x >= 0 && d.y >= 0 && (d.x as u32) < self.width && (d.y as u32) < self.height
    }

    /// Row-major index of an on-board cell.
    pub fn index_of(&self, c: Cell) -> Option<usize> {
        self.contains(c).then(|| {
            let d = c - self.origin;
            d.y as usize * self.width as usize + d.x as usize
        })
    }

    pub fn cell_at(&self, index: usize) -> Cell {
        let w = self.width as usize;
        self.origin + Cell::new((index % w) as i32, (index / w) as i32)
    }

    /// All cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.area()).map(|i| self.cell_at(i))
    }
}

/// A finite set of cells.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellSet(BTreeSet<Cell>);

impl CellSet {
    pub fn new() -> Self {
        CellSet(BTreeSet::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.0.contains(&c)
    }

    pub fn insert(&mut self, c: Cell) -> bool {
        self.0.insert(c)
    }

    pub fn remove(&mut self, c: Cell) -> bool {
        self.0.remove(&c)
    }

    /// Cells in `(y, x)` order.
    pub fn iter(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0.iter().copied()
    }

    pub fn translated(&self, by: Cell) -> CellSet {
        self.iter().map(|c| c + by).collect()
    }

    pub fn map(&self, f: impl Fn(Cell) -> Cell) -> CellSet {
        self.iter().map(f).collect()
    }

    pub fn union(&self, other: &CellSet) -> CellSet {
        CellSet(self.0.union(&other.0).copied().collect())
    }

    pub fn extend(&mut self, cells: impl IntoIterator<Item = Cell>) {
        self.0.extend(cells);
    }

    pub fn as_btree(&self) -> &BTreeSet<Cell> {
        &self.0
    }
}

impl FromIterator<Cell> for CellSet {
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        CellSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a CellSet {
    type Item = &'a Cell;
    type IntoIter = std::collections::btree_set::Iter<'a, Cell>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// An ordered vertex sequence; a cycle when `closed`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CellPath {
    cells: Vec<Cell>,
    closed: bool,
}

impl CellPath {
    pub fn open(cells: Vec<Cell>) -> Self {
        CellPath {
            cells,
            closed: false,
        }
    }

    pub fn closed(cells: Vec<Cell>) -> Self {
        CellPath {
            cells,
            closed: true,
        }
    }

    pub fn from_parts(cells: Vec<Cell>, closed: bool) -> Self {
        CellPath { cells, closed }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn into_cells(self) -> Vec<Cell> {
        self.cells
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        match (self.closed, self.cells.len()) {
            (_, 0) => 0,
            (true, k) => k,
            (false, k) => k - 1,
        }
    }

    pub fn vertex_set(&self) -> CellSet {
        self.cells.iter().copied().collect()
    }

    /// Consecutive pairs, including the closing pair for cycles.
    pub fn edges(&self) -> impl Iterator<Item = (Cell, Cell)> + '_ {
        let k = self.cells.len();
        let extra = usize::from(self.closed && k > 1);
        (0..(k.saturating_sub(1) + extra)).map(move |i| (self.cells[i], self.cells[(i + 1) % k]))
    }

    /// Edges as `(min, max)` pairs, sorted.
    pub fn edge_set(&self) -> Vec<(Cell, Cell)> {
        let mut e: Vec<_> = self
            .edges()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        e.sort();
        e
    }

    pub fn reversed(&self) -> CellPath {
        let mut cells = self.cells.clone();
        cells.reverse();
        CellPath {
            cells,
            closed: self.closed,
        }
    }

    pub fn map(&self, f: impl Fn(Cell) -> Cell) -> CellPath {
        CellPath {
            cells: self.cells.iter().map(|&c| f(c)).collect(),
            closed: self.closed,
        }
    }

    /// Same path or cycle read in a fixed orientation: open paths start at
    /// the smaller endpoint; cycles start at their smallest cell and step
    /// towards the smaller of its two neighbours.
    pub fn normalized(&self) -> CellPath {
        let k = self.cells.len();
        if k < 2 {
            return self.clone();
        }
        if !self.closed {
            return if self.cells[0] <= self.cells[k - 1] {
                self.clone()
            } else {
                self.reversed()
            };
        }
        let (start, _) = self
            .cells
            .iter()
            .enumerate()
            .min_by_key(|(_, c)| **c)
            .expect("non-empty");
        let mut rotated: Vec<Cell> = (0..k).map(|i| self.cells[(start + i) % k]).collect();
        if rotated[k - 1] < rotated[1] {
            rotated[1..].reverse();
        }
        CellPath::closed(rotated)
    }
}

impl fmt::Display for CellPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cells.iter().map(|c| c.to_string()).collect();
        let sep = if self.closed { " ~ " } else { " - " };
        write!(f, "{}", parts.join(sep))?;
        if self.closed {
            write!(f, " ~")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_is_row_major() {
        assert!(Cell::new(5, 0) < Cell::new(0, 1));
        assert!(Cell::new(0, 1) < Cell::new(1, 1));
    }

    #[test]
    fn board_membership_and_index() {
        let b = Board::with_origin(2, 3, Cell::new(-1, 4)).unwrap();
        assert!(b.contains(Cell::new(-1, 4)));
        assert!(b.contains(Cell::new(1, 5)));
        assert!(!b.contains(Cell::new(2, 5)));
        assert_eq!(b.index_of(Cell::new(1, 5)), Some(5));
        assert_eq!(b.cell_at(5), Cell::new(1, 5));
        assert!(Board::new(0, 3).is_err());
    }

    #[test]
    fn path_length_counts_edges() {
        let p = CellPath::open(vec![Cell::new(0, 0), Cell::new(0, 1), Cell::new(1, 1)]);
        assert_eq!(p.len(), 2);
        let c = CellPath::closed(p.cells().to_vec());
        assert_eq!(c.len(), 3);
        assert_eq!(c.edges().count(), 3);
        assert_eq!(CellPath::open(vec![Cell::new(0, 0)]).len(), 0);
    }

    #[test]
    fn normalized_identifies_reversal_and_rotation() {
        let cells = vec![
            Cell::new(1, 0),
            Cell::new(2, 1),
            Cell::new(1, 2),
            Cell::new(0, 1),
        ];
        let c = CellPath::closed(cells.clone());
        let mut rot = cells.clone();
        rot.rotate_left(2);
        rot.reverse();
        assert_eq!(c.normalized(), CellPath::closed(rot).normalized());
        let p = CellPath::open(cells.clone());
        assert_eq!(p.normalized(), p.reversed().normalized());
    }
}
