//! Paths in square grid graphs: segments, turns, the stamp-folding
//! correspondence and free cycles.

use std::collections::{BTreeMap, BTreeSet};

use crate::cell::{Board, Cell, CellPath};
use crate::error::{invalid, Result};
use crate::graph::PieceGraph;
use crate::king::stamp::{is_stamp_folding, StampFolding};
use crate::rules::MoveRule;

/// A path or cycle in the grid graph of the `k x k` board.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GridPath {
    k: u32,
    path: CellPath,
}

/// How a path passes through one of its cells.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pass {
    End,
    Straight,
    Turn,
}

impl GridPath {
    /// Checks that `path` lies on the `k x k` board, visits distinct cells
    /// and moves by unit orthogonal steps.
    pub fn new(k: u32, path: CellPath) -> Result<Self> {
        let board = Board::square(k)?;
        let mut seen = BTreeSet::new();
        for &c in path.cells() {
            if !board.contains(c) {
                return Err(invalid(format!("{c} is outside the {k}x{k} grid")));
            }
            if !seen.insert(c) {
                return Err(invalid(format!("{c} is visited twice")));
            }
        }
        for (a, b) in path.edges() {
            if !MoveRule::Wazir.adjacent(a, b) {
                return Err(invalid(format!("{a} and {b} are not grid neighbours")));
            }
        }
        if path.is_closed() && path.cells().len() < 4 {
            return Err(invalid("a grid cycle needs at least 4 cells"));
        }
        Ok(GridPath { k, path })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn path(&self) -> &CellPath {
        &self.path
    }

    pub fn cells(&self) -> &[Cell] {
        self.path.cells()
    }

    pub fn is_closed(&self) -> bool {
        self.path.is_closed()
    }

    pub fn is_hamiltonian(&self) -> bool {
        self.cells().len() == (self.k * self.k) as usize
    }

    /// Classification of every cell, cyclic for closed paths.
    pub fn passes(&self) -> Vec<Pass> {
        let c = self.cells();
        let n = c.len();
        (0..n)
            .map(|i| {
                let (prev, next) = if self.is_closed() {
                    (c[(i + n - 1) % n], c[(i + 1) % n])
                } else if i == 0 || i + 1 == n {
                    return Pass::End;
                } else {
                    (c[i - 1], c[i + 1])
                };
                if c[i] - prev == next - c[i] {
                    Pass::Straight
                } else {
                    Pass::Turn
                }
            })
            .collect()
    }

    pub fn turns(&self) -> usize {
        self.passes()
            .into_iter()
            .filter(|p| *p == Pass::Turn)
            .count()
    }

    /// Turned about the vertical axis, `x -> k - 1 - x`.
    pub fn reflected(&self) -> GridPath {
        let k = self.k as i32;
        GridPath {
            k: self.k,
            path: self.path.map(|c| Cell::new(k - 1 - c.x, c.y)),
        }
    }

    /// Swaps the axes.
    pub fn transposed(&self) -> GridPath {
        GridPath {
            k: self.k,
            path: self.path.map(|c| Cell::new(c.y, c.x)),
        }
    }
}

/// Splits at turn cells; each turn cell belongs to two segments. Returns
/// the segments and the number of turns.
pub fn path_segments(gp: &GridPath) -> (Vec<CellPath>, usize) {
    let cells = gp.cells();
    let passes = gp.passes();
    let turns: Vec<usize> = (0..cells.len())
        .filter(|&i| passes[i] == Pass::Turn)
        .collect();
    let mut segs = Vec::new();
    if !gp.is_closed() {
        let mut bounds = vec![0];
        bounds.extend(&turns);
        bounds.push(cells.len().saturating_sub(1));
        for w in bounds.windows(2) {
            segs.push(CellPath::open(cells[w[0]..=w[1]].to_vec()));
        }
    } else {
        let n = cells.len();
        for (t, &a) in turns.iter().enumerate() {
            let b = turns[(t + 1) % turns.len()];
            let len = (b + n - a) % n;
            let len = if len == 0 { n } else { len };
            segs.push(CellPath::open(
                (0..=len).map(|d| cells[(a + d) % n]).collect(),
            ));
        }
    }
    (segs, turns.len())
}

/// The mostly-horizontal fewest-turn Hamiltonian path of the `s x s` grid
/// whose `i`-th horizontal segment lies in row `sigma^-1(i)`.
pub fn stamp_to_ham_path(sf: &StampFolding, reflected: bool) -> Result<GridPath> {
    if sf.is_empty() || !is_stamp_folding(sf) {
        return Err(invalid(format!("{:?} is not a stamp folding", sf.sigma())));
    }
    let s = sf.len() as i32;
    let pos = sf.positions();
    let mut cells: Vec<Cell> = Vec::new();
    for i in 0..sf.len() {
        let row = pos[i] as i32;
        let left = sf.omega_left(i) as i32;
        let right = s - sf.omega_right(i) as i32 - 1;
        let (from, to) = if i % 2 == 0 {
            (right, left)
        } else {
            (left, right)
        };
        if let Some(&last) = cells.last() {
            if last.x != from {
                return Err(invalid("segment endpoints do not line up"));
            }
            let step = (row - last.y).signum();
            let mut y = last.y + step;
            while y != row {
                cells.push(Cell::new(from, y));
                y += step;
            }
        }
        let step = if to >= from { 1 } else { -1 };
        let mut x = from;
        loop {
            cells.push(Cell::new(x, row));
            if x == to {
                break;
            }
            x += step;
        }
    }
    let gp = GridPath::new(sf.len() as u32, CellPath::open(cells))?;
    Ok(if reflected { gp.reflected() } else { gp })
}

/// A free 4-cycle `a1 a2 b1 b2` of the grid: `a1 a2` is a path edge with
/// `a1 < a2`, and `b1 = a2 + d`, `b2 = a1 + d` for a unit `d`
/// perpendicular to it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeCycleSpec {
    pub a1: Cell,
    pub a2: Cell,
    pub b1: Cell,
    pub b2: Cell,
}

impl FreeCycleSpec {
    fn new(a1: Cell, a2: Cell, d: Cell) -> Self {
        let (a1, a2) = if a1 <= a2 { (a1, a2) } else { (a2, a1) };
        FreeCycleSpec {
            a1,
            a2,
            b1: a2 + d,
            b2: a1 + d,
        }
    }

    /// Twice the centre of the 4-cycle, which is a cell of the doubled
    /// (king) board.
    pub fn center2(&self) -> Cell {
        let s = self.a1 + self.a2 + self.b1 + self.b2;
        Cell::new(s.x / 2, s.y / 2)
    }
}

fn edge_key(a: Cell, b: Cell) -> (Cell, Cell) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Every free cycle of `gp`, sorted.
pub fn find_free_cycles(gp: &GridPath) -> Vec<FreeCycleSpec> {
    let board = Board::square(gp.k).expect("positive side");
    let edges: BTreeSet<(Cell, Cell)> = gp.path().edges().map(|(a, b)| edge_key(a, b)).collect();
    let passes = gp.passes();
    let pass_of: BTreeMap<Cell, Pass> = gp.cells().iter().copied().zip(passes).collect();
    let is = |c: Cell, p: Pass| pass_of.get(&c) == Some(&p);
    let mut out = Vec::new();
    for &(a1, a2) in &edges {
        let along = a2 - a1;
        for d in [Cell::new(along.y, along.x), Cell::new(-along.y, -along.x)] {
            let f = FreeCycleSpec::new(a1, a2, d);
            if !board.contains(f.b1) || !board.contains(f.b2) {
                continue;
            }
            let others = [(f.a2, f.b1), (f.b1, f.b2), (f.b2, f.a1)];
            if others.iter().any(|&(x, y)| edges.contains(&edge_key(x, y))) {
                continue;
            }
            if is(f.a1, Pass::Straight)
                && is(f.a2, Pass::Straight)
                && is(f.b1, Pass::Turn)
                && is(f.b2, Pass::Turn)
            {
                out.push(f);
            }
        }
    }
    out.sort();
    out
}

/// Free cycles of `stamp_to_ham_path(sf, false)` read off the permutation
/// alone.
pub fn free_cycles_from_stamp(sf: &StampFolding) -> Result<Vec<FreeCycleSpec>> {
    if !is_stamp_folding(sf) {
        return Err(invalid(format!("{:?} is not a stamp folding", sf.sigma())));
    }
    let k = sf.len() as i64;
    let pos = sf.positions();
    let sigma = sf.sigma();
    let partner = |v: usize, eps: i64| -> Option<usize> {
        let sign = if v.is_multiple_of(2) { 1 } else { -1 };
        let w = v as i64 + eps * sign;
        (0..k).contains(&w).then_some(w as usize)
    };
    let mut out = Vec::new();
    for eps in [1i64, -1] {
        for i in 0..sf.len().saturating_sub(1) {
            let (u, v) = (sigma[i], sigma[i + 1]);
            let (Some(u2), Some(v2)) = (partner(u, eps), partner(v, eps)) else {
                continue;
            };
            if !(sf.between(&pos, u, u2, v2) && sf.between(&pos, v, u2, v2)) {
                continue;
            }
            let enclosed = (0..sf.len()).any(|j| {
                partner(j, eps)
                    .is_some_and(|j2| [u, v, u2, v2].iter().all(|&t| sf.between(&pos, t, j, j2)))
            });
            if !enclosed {
                continue;
            }
            let (col, d) = if eps == 1 {
                (sf.omega_left(u) as i32 - 1, Cell::new(1, 0))
            } else {
                (k as i32 - sf.omega_right(u) as i32, Cell::new(-1, 0))
            };
            let a1 = Cell::new(col, i as i32);
            let a2 = Cell::new(col, i as i32 + 1);
            out.push(FreeCycleSpec::new(a1, a2, d));
        }
    }
    out.sort();
    Ok(out)
}

/// The grid graph of the `k x k` board.
pub fn grid(k: u32) -> Result<PieceGraph> {
    PieceGraph::square(MoveRule::Wazir, k)
}
