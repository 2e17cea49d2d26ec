//! Checks that lifts of fewest-turn grid paths and cycles are exactly the
//! longest king snakes on odd boards.

use std::collections::BTreeSet;

use crate::cell::{Cell, CellPath};
use crate::error::{invalid, Error, Result};
use crate::graph::PieceGraph;
use crate::king::gridpath::{find_free_cycles, GridPath};
use crate::king::lift::all_lifts;
use crate::rules::MoveRule;
use crate::search::hamilton::{enumerate_grid_ham_cycles, enumerate_grid_ham_paths};
use crate::search::snake::{enumerate_maxima, Mode};

/// Outcome of a successful bijection check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftReport {
    pub n: u32,
    pub grid_paths: usize,
    pub lifts: usize,
    pub maxima: usize,
    pub max_length: usize,
}

fn key(p: &CellPath) -> (bool, Vec<(Cell, Cell)>) {
    let mut e: Vec<(Cell, Cell)> = p
        .edges()
        .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
        .collect();
    e.sort();
    (p.is_closed(), e)
}

fn compare(n: u32, grid: &[GridPath], mode: Mode) -> Result<LiftReport> {
    let graph = PieceGraph::square(MoveRule::King, n)?;
    let mut lifted = BTreeSet::new();
    let mut max_length = 0;
    for gp in grid {
        for p in all_lifts(gp) {
            max_length = max_length.max(p.len());
            if !lifted.insert(key(&p)) {
                return Err(Error::Verification(format!("lift {p} arises twice")));
            }
        }
    }
    let found = enumerate_maxima(&graph, mode)?;
    let maxima: BTreeSet<_> = found.solutions.iter().map(key).collect();
    if let Some(extra) = lifted.difference(&maxima).next() {
        return Err(Error::Verification(format!(
            "lift {:?} is not a longest snake",
            extra.1
        )));
    }
    if let Some(missing) = maxima.difference(&lifted).next() {
        return Err(Error::Verification(format!(
            "longest snake {:?} is not a lift",
            missing.1
        )));
    }
    Ok(LiftReport {
        n,
        grid_paths: grid.len(),
        lifts: lifted.len(),
        maxima: maxima.len(),
        max_length: found.max_length.unwrap_or(max_length),
    })
}

/// Lifts of fewest-turn Hamiltonian paths of the `(n+1)/2` grid against
/// the longest king snake paths of the `n x n` board.
pub fn verify_lift_bijection(n: u32) -> Result<LiftReport> {
    if n.is_multiple_of(2) {
        return Err(invalid(format!("lift bijection needs odd n, got {n}")));
    }
    let k = n.div_ceil(2);
    let grid = enumerate_grid_ham_paths(k, (2 * k - 2) as usize)?;
    compare(n, &grid.paths, Mode::Path)
}

/// Lifts of fewest-turn Hamiltonian cycles of the `(n+1)/2` grid against
/// the longest king snake cycles of the `n x n` board, `n ≡ 3 (mod 4)`.
pub fn verify_cycle_lift_bijection(n: u32) -> Result<LiftReport> {
    if n % 4 != 3 {
        return Err(invalid(format!(
            "cycle lift bijection needs n ≡ 3 (mod 4), got {n}"
        )));
    }
    let k = n.div_ceil(2);
    let grid = enumerate_grid_ham_cycles(k, 2 * k as usize)?;
    compare(n, &grid.paths, Mode::Cycle)
}

/// The largest number of free cycles over fewest-turn Hamiltonian paths of
/// the `k x k` grid, with one path attaining it.
pub fn max_free_cycles(k: u32) -> Result<(usize, GridPath)> {
    let grid = enumerate_grid_ham_paths(k, (2 * k).saturating_sub(2) as usize)?;
    grid.paths
        .into_iter()
        .map(|gp| (find_free_cycles(&gp).len(), gp))
        .max_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cells().cmp(a.1.cells())))
        .ok_or_else(|| invalid("no Hamiltonian path"))
}
