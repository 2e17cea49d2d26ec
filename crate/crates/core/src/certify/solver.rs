//! Exact maximum-weight pseudosnake by branch and bound.
//!
//! Cells are decided in a static order (descending weight, then cell order).
//! A cell is excluded as soon as including it would give some included cell
//! more than two included neighbours. The bound splits the weights into
//! pieces, each a small cell set counted with a multiplicity, and adds up
//! the largest pseudosnake of every piece compatible with the decisions so
//! far.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use crate::cell::{Cell, CellSet};
use crate::error::{invalid, Error, Result};
use crate::knight::WeightedCellSet;
use crate::rules::MoveRule;

/// Instances are limited to this many cells.
pub const MAX_SOLVER_CELLS: usize = 128;
/// Pieces of the bound have at most this many cells.
pub const MAX_PIECE_CELLS: usize = 16;
const AUTO_PIECE_CELLS: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverResult {
    pub optimum: u64,
    pub witness: CellSet,
    pub nodes: u64,
    pub proven_optimal: bool,
}

#[derive(Clone, Debug)]
pub struct SolverOptions {
    pub node_budget: u64,
    /// Worker threads; 1 runs sequentially, 0 uses the rayon default.
    pub workers: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            node_budget: u64::MAX,
            workers: 1,
        }
    }
}

struct Piece {
    mask: u128,
    mult: u64,
    /// Pseudosnake subsets of the piece, largest first.
    subsets: Vec<(u64, u128)>,
}

struct Instance {
    cells: Vec<Cell>,
    weight: Vec<u64>,
    nbr: Vec<u128>,
    pieces: Vec<Piece>,
}

fn bits(mut m: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let i = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(i)
    })
}

impl Instance {
    fn new(g: &WeightedCellSet, rule: MoveRule, cover: Option<&[CellSet]>) -> Result<Self> {
        if g.len() > MAX_SOLVER_CELLS {
            return Err(invalid(format!(
                "solver takes at most {MAX_SOLVER_CELLS} cells, got {}",
                g.len()
            )));
        }
        let mut order: Vec<(Cell, u64)> = g.iter().collect();
        order.sort_by_key(|&(c, w)| (std::cmp::Reverse(w), c));
        let cells: Vec<Cell> = order.iter().map(|t| t.0).collect();
        let weight: Vec<u64> = order.iter().map(|t| t.1).collect();
        let index = |c: Cell| cells.iter().position(|&d| d == c);
        let nbr = cells
            .iter()
            .map(|&a| {
                cells
                    .iter()
                    .enumerate()
                    .filter(|&(_, &b)| rule.adjacent(a, b))
                    .fold(0u128, |m, (j, _)| m | 1 << j)
            })
            .collect();
        let mut inst = Instance {
            cells: cells.clone(),
            weight,
            nbr,
            pieces: Vec::new(),
        };
        let raw: Vec<(u128, u64)> = match cover {
            Some(sets) => {
                let mut out = Vec::new();
                for s in sets {
                    let mut m = 0u128;
                    for c in s.iter() {
                        let i = index(c).ok_or_else(|| {
                            invalid(format!("cover cell {c} is not in the instance"))
                        })?;
                        m |= 1 << i;
                    }
                    out.push((m, 1));
                }
                let mut sum = vec![0u64; cells.len()];
                for &(m, k) in &out {
                    for i in bits(m) {
                        sum[i] += k;
                    }
                }
                if sum != inst.weight {
                    return Err(invalid("cover multiplicities do not add up to the weights"));
                }
                out
            }
            None => inst.auto_cover(),
        };
        for (mask, mult) in raw {
            if mask.count_ones() as usize > MAX_PIECE_CELLS {
                return Err(invalid(format!(
                    "cover pieces have at most {MAX_PIECE_CELLS} cells"
                )));
            }
            let subsets = inst.piece_subsets(mask);
            inst.pieces.push(Piece {
                mask,
                mult,
                subsets,
            });
        }
        Ok(inst)
    }

    /// Greedy clusters of densely joined cells, each taken with the least
    /// remaining weight among its members.
    fn auto_cover(&self) -> Vec<(u128, u64)> {
        let mut rest = self.weight.clone();
        let mut out = Vec::new();
        while let Some(seed) = rest.iter().position(|&r| r > 0) {
            let live: u128 = rest
                .iter()
                .enumerate()
                .filter(|t| *t.1 > 0)
                .fold(0, |m, (i, _)| m | 1 << i);
            let mut cluster = 1u128 << seed;
            while (cluster.count_ones() as usize) < AUTO_PIECE_CELLS {
                let frontier = bits(cluster).fold(0u128, |m, i| m | self.nbr[i]) & live & !cluster;
                let Some(next) = bits(frontier)
                    .max_by_key(|&j| ((self.nbr[j] & cluster).count_ones(), std::cmp::Reverse(j)))
                else {
                    break;
                };
                cluster |= 1 << next;
            }
            let mult = bits(cluster).map(|i| rest[i]).min().expect("non-empty");
            for i in bits(cluster) {
                rest[i] -= mult;
            }
            out.push((cluster, mult));
        }
        out
    }

    fn piece_subsets(&self, mask: u128) -> Vec<(u64, u128)> {
        let members: Vec<usize> = bits(mask).collect();
        let mut out: Vec<(u64, u128)> = (0u32..1 << members.len())
            .map(|local| {
                members
                    .iter()
                    .enumerate()
                    .filter(|t| local >> t.0 & 1 == 1)
                    .fold(0u128, |m, (_, &i)| m | 1 << i)
            })
            .filter(|&s| bits(s).all(|i| (self.nbr[i] & s).count_ones() <= 2))
            .map(|s| (s.count_ones() as u64, s))
            .collect();
        out.sort_by_key(|&(k, s)| (std::cmp::Reverse(k), s));
        out
    }

    fn all(&self) -> u128 {
        if self.cells.len() == 128 {
            u128::MAX
        } else {
            (1u128 << self.cells.len()) - 1
        }
    }

    fn weight_of(&self, m: u128) -> u64 {
        bits(m).map(|i| self.weight[i]).sum()
    }

    /// Undecided cells that can no longer be included.
    fn blocked(&self, inc: u128) -> u128 {
        let mut out = 0u128;
        for i in bits(inc) {
            if (self.nbr[i] & inc).count_ones() >= 2 {
                out |= self.nbr[i];
            }
        }
        for j in bits(self.all() & !inc & !out) {
            if (self.nbr[j] & inc).count_ones() >= 3 {
                out |= 1 << j;
            }
        }
        out & !inc
    }

    fn bound(&self, inc: u128, exc: u128) -> u64 {
        self.pieces
            .iter()
            .map(|p| {
                let (pi, pe) = (inc & p.mask, exc & p.mask);
                let best = p
                    .subsets
                    .iter()
                    .find(|&&(_, s)| s & pi == pi && s & pe == 0)
                    .map_or(0, |t| t.0);
                best * p.mult
            })
            .sum()
    }
}

struct Run<'a> {
    inst: &'a Instance,
    budget: u64,
    nodes: AtomicU64,
    best: AtomicU64,
    out_of_budget: AtomicBool,
    /// Stop at the first set reaching this weight.
    target: Option<u64>,
    found: AtomicBool,
}

impl Run<'_> {
    fn new(inst: &Instance, budget: u64, target: Option<u64>) -> Run<'_> {
        Run {
            inst,
            budget,
            nodes: AtomicU64::new(0),
            best: AtomicU64::new(0),
            out_of_budget: AtomicBool::new(false),
            target,
            found: AtomicBool::new(false),
        }
    }

    fn stopped(&self) -> bool {
        self.out_of_budget.load(Ordering::Relaxed) || self.found.load(Ordering::Relaxed)
    }

    /// Returns the best improving set found below this node.
    fn dfs(&self, inc: u128, exc: u128) -> Option<(u64, u128)> {
        if self.stopped() {
            return None;
        }
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
            self.out_of_budget.store(true, Ordering::Relaxed);
            return None;
        }
        let inst = self.inst;
        let exc = exc | inst.blocked(inc);
        let bound = inst.bound(inc, exc);
        let here = inst.weight_of(inc);
        let mut result = None;
        match self.target {
            Some(t) => {
                if here >= t {
                    self.found.store(true, Ordering::Relaxed);
                    return Some((here, inc));
                }
                if bound < t {
                    return None;
                }
            }
            None => {
                if here > self.best.fetch_max(here, Ordering::Relaxed) {
                    result = Some((here, inc));
                }
                if bound <= self.best.load(Ordering::Relaxed) {
                    return result;
                }
            }
        }
        let free = inst.all() & !inc & !exc;
        if free == 0 {
            return result;
        }
        let i = free.trailing_zeros() as usize;
        for branch in [Some(i), None] {
            let r = match branch {
                Some(i) => self.dfs(inc | 1 << i, exc),
                None => self.dfs(inc, exc | 1 << i),
            };
            if let Some(r) = r {
                if result.is_none_or(|b: (u64, u128)| r.0 > b.0) {
                    result = Some(r);
                }
            }
        }
        result
    }

    /// Decision prefixes for parallel work units.
    fn split(&self, inc: u128, exc: u128, depth: usize, out: &mut Vec<(u128, u128)>) {
        let exc = exc | self.inst.blocked(inc);
        let free = self.inst.all() & !inc & !exc;
        if depth == 0 || free == 0 {
            out.push((inc, exc));
            return;
        }
        let i = free.trailing_zeros() as usize;
        self.split(inc | 1 << i, exc, depth - 1, out);
        self.split(inc, exc | 1 << i, depth - 1, out);
    }

    fn solve(&self, inc: u128, exc: u128, workers: usize) -> Result<Option<(u64, u128)>> {
        if workers == 1 {
            return Ok(self.dfs(inc, exc));
        }
        let mut units = Vec::new();
        self.split(inc, exc, 8, &mut units);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::Limit(e.to_string()))?;
        let found: Vec<(u64, u128)> = pool.install(|| {
            units
                .par_iter()
                .filter_map(|&(i, e)| self.dfs(i, e))
                .collect()
        });
        Ok(found.into_iter().max_by_key(|t| t.0))
    }
}

/// Maximum total weight of a pseudosnake in the graph of `rule` on the
/// cells of `g`, with the bound built from an automatic cover.
pub fn max_weight_pseudosnake(
    g: &WeightedCellSet,
    rule: MoveRule,
    budget: u64,
) -> Result<SolverResult> {
    let opts = SolverOptions {
        node_budget: budget,
        ..SolverOptions::default()
    };
    max_weight_pseudosnake_with(g, rule, &opts, None)
}

/// As [`max_weight_pseudosnake`], optionally bounding with `cover`: cell
/// sets of at most [`MAX_PIECE_CELLS`] cells such that every cell lies in
/// exactly as many of them as its weight.
///
/// Among all optima the witness is fixed by taking cells greedily in cell
/// order whenever an optimum containing them exists. Node counts depend on
/// the worker count; the optimum and witness do not.
pub fn max_weight_pseudosnake_with(
    g: &WeightedCellSet,
    rule: MoveRule,
    opts: &SolverOptions,
    cover: Option<&[CellSet]>,
) -> Result<SolverResult> {
    let inst = Instance::new(g, rule, cover)?;
    let run = Run::new(&inst, opts.node_budget, None);
    let best = run.solve(0, 0, opts.workers)?;
    let mut nodes = run.nodes.load(Ordering::Relaxed).min(opts.node_budget);
    let (optimum, found) = best.unwrap_or((0, 0));
    let to_set = |m: u128| -> CellSet { bits(m).map(|i| inst.cells[i]).collect() };
    if run.out_of_budget.load(Ordering::Relaxed) {
        return Ok(SolverResult {
            optimum,
            witness: to_set(found),
            nodes,
            proven_optimal: false,
        });
    }
    let mut by_cell: Vec<usize> = (0..inst.cells.len()).collect();
    by_cell.sort_by_key(|&i| inst.cells[i]);
    let (mut inc, mut exc) = (0u128, 0u128);
    for i in by_cell {
        if (inc | exc | inst.blocked(inc)) >> i & 1 == 1 {
            continue;
        }
        let probe = Run::new(&inst, opts.node_budget.saturating_sub(nodes), Some(optimum));
        let hit = probe.solve(inc | 1 << i, exc, opts.workers)?;
        nodes += probe.nodes.load(Ordering::Relaxed);
        if probe.out_of_budget.load(Ordering::Relaxed) {
            return Ok(SolverResult {
                optimum,
                witness: to_set(found),
                nodes: nodes.min(opts.node_budget),
                proven_optimal: true,
            });
        }
        if hit.is_some() {
            inc |= 1 << i;
        } else {
            exc |= 1 << i;
        }
    }
    debug_assert_eq!(inst.weight_of(inc), optimum);
    Ok(SolverResult {
        optimum,
        witness: to_set(inc),
        nodes,
        proven_optimal: true,
    })
}

/// Subset enumeration, for instances of at most 24 cells.
pub fn brute_force_max_weight(g: &WeightedCellSet, rule: MoveRule) -> Result<(u64, CellSet)> {
    if g.len() > 24 {
        return Err(invalid("brute force takes at most 24 cells"));
    }
    let cells: Vec<(Cell, u64)> = g.iter().collect();
    let nbr: Vec<u32> = cells
        .iter()
        .map(|&(a, _)| {
            cells
                .iter()
                .enumerate()
                .filter(|t| rule.adjacent(a, t.1 .0))
                .fold(0, |m, (j, _)| m | 1 << j)
        })
        .collect();
    let mut best = (0u64, 0u32);
    for s in 0u32..1 << cells.len() {
        let mut w = 0;
        let mut ok = true;
        let mut rest = s;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (nbr[i] & s).count_ones() > 2 {
                ok = false;
                break;
            }
            w += cells[i].1;
        }
        if ok && w > best.0 {
            best = (w, s);
        }
    }
    let set = (0..cells.len())
        .filter(|i| best.1 >> i & 1 == 1)
        .map(|i| cells[i].0)
        .collect();
    Ok((best.0, set))
}
