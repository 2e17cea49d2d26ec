//! Hamiltonian paths and cycles of small square grids with few turns.

use std::collections::BTreeSet;

use crate::cell::{Board, Cell, CellPath};
use crate::error::{invalid, Error, Result};
use crate::king::gridpath::GridPath;
use crate::symmetry::canonicalize;

/// Largest grid side the enumerators accept.
pub const MAX_GRID_SIDE: u32 = 8;

/// Output of a grid enumeration.
#[derive(Clone, Debug)]
pub struct GridEnumeration {
    /// Normalized, sorted.
    pub paths: Vec<GridPath>,
    pub count: usize,
    /// Number of classes under the symmetries of the square.
    pub classes: usize,
    pub min_turns: Option<usize>,
}

impl GridEnumeration {
    fn from_paths(k: u32, mut paths: Vec<GridPath>) -> Self {
        paths.sort_by(|a, b| a.cells().cmp(b.cells()));
        let board = Board::square(k).expect("positive side");
        let classes: BTreeSet<Vec<Cell>> = paths
            .iter()
            .map(|p| canonicalize(&board, p.path()).rep.cells().to_vec())
            .collect();
        GridEnumeration {
            count: paths.len(),
            classes: classes.len(),
            min_turns: paths.iter().map(GridPath::turns).min(),
            paths,
        }
    }
}

struct Grid {
    k: usize,
    adj: Vec<u64>,
}

impl Grid {
    fn new(k: u32) -> Result<Self> {
        if k == 0 || k > MAX_GRID_SIDE {
            return Err(Error::Limit(format!(
                "grid side must be 1..={MAX_GRID_SIDE}, got {k}"
            )));
        }
        let k = k as usize;
        let adj = (0..k * k)
            .map(|i| {
                let (x, y) = (i % k, i / k);
                let mut m = 0u64;
                if x > 0 {
                    m |= 1 << (i - 1);
                }
                if x + 1 < k {
                    m |= 1 << (i + 1);
                }
                if y > 0 {
                    m |= 1 << (i - k);
                }
                if y + 1 < k {
                    m |= 1 << (i + k);
                }
                m
            })
            .collect();
        Ok(Grid { k, adj })
    }

    fn cell(&self, i: usize) -> Cell {
        Cell::new((i % self.k) as i32, (i / self.k) as i32)
    }

    fn connected(&self, from: usize, free: u64) -> bool {
        let mut seen = 1u64 << from;
        let mut frontier = seen;
        while frontier != 0 {
            let i = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.adj[i] & free & !seen;
            seen |= new;
            frontier |= new;
        }
        free & !seen == 0
    }
}

struct Walk<'a> {
    grid: &'a Grid,
    closed: bool,
    target: usize,
    max_turns: usize,
    path: Vec<usize>,
    visited: u64,
    allowed: u64,
    found: Vec<GridPath>,
}

impl Walk<'_> {
    fn dir(&self, a: usize, b: usize) -> isize {
        b as isize - a as isize
    }

    fn go(&mut self, turns: usize) {
        let n = self.path.len();
        let head = self.path[n - 1];
        if n == self.target {
            self.record();
            return;
        }
        let free = self.allowed & !self.visited;
        let left = self.target - n;
        let k = self.grid.k;
        if left > (self.max_turns - turns + 1) * (k - 1) {
            return;
        }
        if !self.grid.connected(head, free | 1 << head) {
            return;
        }
        if self.closed && self.grid.adj[self.path[0]] & free == 0 {
            return;
        }
        let mut cand = self.grid.adj[head] & free;
        while cand != 0 {
            let c = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let t = if n >= 2 && self.dir(self.path[n - 2], head) != self.dir(head, c) {
                turns + 1
            } else {
                turns
            };
            if t > self.max_turns {
                continue;
            }
            self.path.push(c);
            self.visited |= 1 << c;
            self.go(t);
            self.visited &= !(1 << c);
            self.path.pop();
        }
    }

    fn record(&mut self) {
        let (first, last) = (self.path[0], *self.path.last().expect("non-empty"));
        if self.closed {
            if self.path.len() < 4 || self.grid.adj[first] >> last & 1 == 0 || self.path[1] > last {
                return;
            }
        } else if self.path.len() > 1 && first > last {
            return;
        }
        let cells: Vec<Cell> = self.path.iter().map(|&i| self.grid.cell(i)).collect();
        let p = CellPath::from_parts(cells, self.closed);
        let gp = GridPath::new(self.grid.k as u32, p).expect("grid walk");
        if gp.turns() <= self.max_turns {
            self.found.push(gp);
        }
    }
}

fn walk(k: u32, closed: bool, skip: Option<usize>, max_turns: usize) -> Result<Vec<GridPath>> {
    let grid = Grid::new(k)?;
    let all = if k * k == 64 {
        u64::MAX
    } else {
        (1u64 << (k * k)) - 1
    };
    let allowed = all & !skip.map_or(0, |s| 1u64 << s);
    let target = allowed.count_ones() as usize;
    let starts: Vec<usize> = if closed {
        vec![allowed.trailing_zeros() as usize]
    } else {
        (0..(k * k) as usize)
            .filter(|&i| allowed >> i & 1 == 1)
            .collect()
    };
    let mut found = Vec::new();
    for s in starts {
        let mut w = Walk {
            grid: &grid,
            closed,
            target,
            max_turns,
            path: vec![s],
            visited: 1 << s,
            allowed,
            found: Vec::new(),
        };
        w.go(0);
        found.append(&mut w.found);
    }
    Ok(found)
}

/// Hamiltonian paths of the `k x k` grid with at most `max_turns` turns,
/// each listed once regardless of direction.
pub fn enumerate_grid_ham_paths(k: u32, max_turns: usize) -> Result<GridEnumeration> {
    let paths = walk(k, false, None, max_turns)?;
    Ok(GridEnumeration::from_paths(k, paths))
}

/// Hamiltonian cycles of the `k x k` grid (`k` even) with at most
/// `max_turns` turns, counted cyclically.
pub fn enumerate_grid_ham_cycles(k: u32, max_turns: usize) -> Result<GridEnumeration> {
    if k % 2 == 1 {
        return Err(invalid(format!(
            "the {k}x{k} grid has no Hamiltonian cycle"
        )));
    }
    let paths = walk(k, true, None, max_turns)?;
    Ok(GridEnumeration::from_paths(k, paths))
}

/// Cycles of the `k x k` grid (`k` odd, `k >= 3`) through all cells but
/// one, with at most `max_turns` turns.
pub fn enumerate_near_ham_cycles(k: u32, max_turns: usize) -> Result<GridEnumeration> {
    if k.is_multiple_of(2) || k < 3 {
        return Err(invalid(format!(
            "near-Hamiltonian cycles need odd k >= 3, got {k}"
        )));
    }
    let mut paths = Vec::new();
    // The missing cell has the majority colour, like the corners.
    for skip in
        (0..(k * k) as usize).filter(|i| (i % k as usize + i / k as usize).is_multiple_of(2))
    {
        paths.extend(walk(k, true, Some(skip), max_turns)?);
    }
    Ok(GridEnumeration::from_paths(k, paths))
}
