//! Board symmetries and canonical representatives under them.

use crate::cell::{Board, Cell, CellPath, CellSet};

/// One element of the dihedral group of a board, acting on board cells.
///
/// Elements 0..4 (identity, horizontal flip, vertical flip, half turn) exist
/// on every board; 4..8 involve a transpose and exist only on squares.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symmetry(u8);

impl Symmetry {
    pub const IDENTITY: Symmetry = Symmetry(0);

    /// The symmetry group of `board`, identity first.
    pub fn group(board: &Board) -> Vec<Symmetry> {
        let order = if board.is_square() { 8 } else { 4 };
        (0..order).map(Symmetry).collect()
    }

    pub fn apply(self, board: &Board, c: Cell) -> Cell {
        let o = board.origin();
        let w = board.width() as i32 - 1;
        let h = board.height() as i32 - 1;
        let (x, y) = (c.x - o.x, c.y - o.y);
        let (x, y) = if self.0 >= 4 { (y, x) } else { (x, y) };
        let (x, y) = match self.0 % 4 {
            0 => (x, y),
            1 => (w - x, y),
            2 => (x, h - y),
            _ => (w - x, h - y),
        };
        Cell::new(x + o.x, y + o.y)
    }

    pub fn apply_set(self, board: &Board, s: &CellSet) -> CellSet {
        s.map(|c| self.apply(board, c))
    }

    pub fn apply_path(self, board: &Board, p: &CellPath) -> CellPath {
        p.map(|c| self.apply(board, c))
    }
}

/// A canonical representative together with the size of its orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical<T> {
    pub rep: T,
    pub class_size: usize,
}

/// Objects that can be canonicalized under board symmetries.
pub trait Canonicalize: Sized + Clone {
    type Key: Ord;
    fn key(&self) -> Self::Key;
    fn transformed(&self, board: &Board, g: Symmetry) -> Self;
    /// Representative form of an orbit element once it has been chosen.
    fn tidy(self) -> Self {
        self
    }
}

impl Canonicalize for CellSet {
    type Key = Vec<Cell>;
    fn key(&self) -> Vec<Cell> {
        self.iter().collect()
    }
    fn transformed(&self, board: &Board, g: Symmetry) -> Self {
        g.apply_set(board, self)
    }
}

impl Canonicalize for CellPath {
    type Key = (bool, Vec<(Cell, Cell)>);
    /// Sorted edge list, so a path and its reversal share a key. Single
    /// cells have no edges and are keyed by the cell itself.
    fn key(&self) -> Self::Key {
        if self.cells().len() == 1 {
            let c = self.cells()[0];
            return (self.is_closed(), vec![(c, c)]);
        }
        (self.is_closed(), self.edge_set())
    }
    fn transformed(&self, board: &Board, g: Symmetry) -> Self {
        g.apply_path(board, self)
    }
    fn tidy(self) -> Self {
        self.normalized()
    }
}

/// Minimum image over the board's symmetry group and the orbit size.
pub fn canonicalize<T: Canonicalize>(board: &Board, obj: &T) -> Canonical<T> {
    let mut images: Vec<(T::Key, T)> = Symmetry::group(board)
        .into_iter()
        .map(|g| {
            let t = obj.transformed(board, g);
            (t.key(), t)
        })
        .collect();
    images.sort_by(|a, b| a.0.cmp(&b.0));
    let class_size = 1 + images.windows(2).filter(|w| w[0].0 != w[1].0).count();
    let rep = images.swap_remove(0).1.tidy();
    Canonical { rep, class_size }
}

/// Union of all symmetry images of `s` on `board`.
pub fn symmetric_closure(board: &Board, s: &CellSet) -> CellSet {
    let mut out = CellSet::new();
    for g in Symmetry::group(board) {
        out.extend(g.apply_set(board, s).iter());
    }
    out
}
