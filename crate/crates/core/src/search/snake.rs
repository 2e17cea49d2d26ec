//! Exhaustive longest snake path and cycle search.
//!
//! A partial snake grows only at its head. A cell can be appended iff it is
//! adjacent to the head and to no other cell of the path, which keeps the
//! path induced at every step. `blocked` holds the path together with the
//! neighbourhood of every non-head cell, so the admissible cells are just
//! `adj[head] & !blocked`.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::bits::{bit, ones, IndexedGraph, Mask};
use crate::cell::{Cell, CellPath};
use crate::error::{invalid, Result};
use crate::graph::PieceGraph;
use crate::rules::MoveRule;
use crate::search::checkpoint::Checkpoint;
use crate::symmetry::{canonicalize, Symmetry};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Path,
    Cycle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Objective {
    /// Maximum length and one witness.
    FindMax,
    /// Every solution of maximum length.
    EnumerateMax,
    /// Every solution of exactly the given length (edges).
    EnumerateLength(usize),
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub mode: Mode,
    pub objective: Objective,
    pub node_budget: u64,
    /// Worker threads; 0 uses the rayon default.
    pub workers: usize,
    pub symmetry: bool,
    /// Prefix length of the parallel work units.
    pub split_depth: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            mode: Mode::Path,
            objective: Objective::EnumerateMax,
            node_budget: u64::MAX,
            workers: 0,
            symmetry: true,
            split_depth: 3,
        }
    }
}

impl SearchOptions {
    pub fn new(mode: Mode, objective: Objective) -> Self {
        SearchOptions {
            mode,
            objective,
            ..Default::default()
        }
    }

    pub fn with_symmetry(mut self, on: bool) -> Self {
        self.symmetry = on;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn with_budget(mut self, nodes: u64) -> Self {
        self.node_budget = nodes;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    /// Length in edges of the best solution, `None` when nothing was found.
    pub max_length: Option<usize>,
    /// Every solution found, normalized and sorted.
    pub solutions: Vec<CellPath>,
    /// One canonical representative per symmetry class, sorted.
    pub representatives: Vec<CellPath>,
    pub total_count: u64,
    pub distinct_count: usize,
    pub nodes: u64,
    /// False when the node budget ran out before the search finished.
    pub exhausted: bool,
}

/// Longest snake in `graph` under the given options.
pub fn longest_snake(graph: &PieceGraph, opts: &SearchOptions) -> Result<SearchResult> {
    run(graph, opts, None)
}

/// Every maximum snake path or cycle, with symmetry reduction.
pub fn enumerate_maxima(graph: &PieceGraph, mode: Mode) -> Result<SearchResult> {
    longest_snake(graph, &SearchOptions::new(mode, Objective::EnumerateMax))
}

/// Like [`longest_snake`] but records finished work units to `checkpoint`
/// and skips units already recorded there.
pub fn longest_snake_checkpointed(
    graph: &PieceGraph,
    opts: &SearchOptions,
    checkpoint: &std::path::Path,
) -> Result<SearchResult> {
    run(graph, opts, Some(checkpoint))
}

fn edges_of(mode: Mode, cells: usize) -> usize {
    match mode {
        Mode::Path => cells.saturating_sub(1),
        Mode::Cycle => cells,
    }
}

struct Shared {
    best: AtomicUsize,
    nodes: AtomicU64,
    budget: u64,
    aborted: AtomicBool,
}

/// Result of one work unit, in cell counts and index lists.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct UnitResult {
    pub best: usize,
    pub solutions: Vec<Vec<usize>>,
}

struct Engine<'a> {
    ig: &'a IndexedGraph,
    mode: Mode,
    objective: Objective,
    symmetry: bool,
    /// 2x2 clique partitions used by the king bound.
    blocks: Vec<Vec<Mask>>,
    shared: Shared,
}

struct Worker<'e, 'a> {
    e: &'e Engine<'a>,
    start: usize,
    allowed: Mask,
    path: Vec<usize>,
    blocked: Mask,
    local: UnitResult,
    nodes: u64,
}

impl<'a> Engine<'a> {
    fn target(&self) -> Option<usize> {
        match self.objective {
            Objective::EnumerateLength(l) => Some(match self.mode {
                Mode::Path => l + 1,
                Mode::Cycle => l,
            }),
            _ => None,
        }
    }

    /// Start cells and their allowed-cell masks.
    fn starts(&self) -> Vec<(usize, Mask)> {
        let n = self.ig.len();
        let orbit_min = self.ig.orbit_min();
        let mut out = Vec::new();
        for s in 0..n {
            if self.symmetry && orbit_min[s] != s {
                continue;
            }
            let allowed = match (self.mode, self.symmetry) {
                (Mode::Path, _) => self.ig.all,
                (Mode::Cycle, false) => self.ig.all & !(bit(s + 1) - 1) | bit(s),
                (Mode::Cycle, true) => (0..n)
                    .filter(|&c| orbit_min[c] >= s)
                    .fold(0, |m, c| m | bit(c)),
            };
            out.push((s, allowed));
        }
        out
    }

    fn bound(&self, reach: Mask) -> usize {
        let plain = reach.count_ones() as usize;
        self.blocks
            .iter()
            .map(|family| {
                family
                    .iter()
                    .map(|&b| ((reach & b).count_ones() as usize).min(2))
                    .sum::<usize>()
            })
            .fold(plain, usize::min)
    }
}

impl<'e, 'a> Worker<'e, 'a> {
    fn new(e: &'e Engine<'a>, start: usize, allowed: Mask) -> Self {
        Worker {
            e,
            start,
            allowed,
            path: vec![start],
            blocked: bit(start),
            local: UnitResult::default(),
            nodes: 0,
        }
    }

    fn head(&self) -> usize {
        *self.path.last().expect("non-empty path")
    }

    fn push(&mut self, c: usize) -> Mask {
        let saved = self.blocked;
        let head = self.head();
        let head_blocks = match self.e.mode {
            Mode::Path => true,
            Mode::Cycle => head != self.start,
        };
        if head_blocks {
            self.blocked |= self.e.ig.adj[head];
        }
        self.blocked |= bit(c);
        self.path.push(c);
        saved
    }

    fn pop(&mut self, saved: Mask) {
        self.path.pop();
        self.blocked = saved;
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes & 255 == 0 {
            self.add_nodes(256);
        }
        !self.e.shared.aborted.load(Ordering::Relaxed)
    }

    fn add_nodes(&self, k: u64) {
        let total = self.e.shared.nodes.fetch_add(k, Ordering::Relaxed) + k;
        if total > self.e.shared.budget {
            self.e.shared.aborted.store(true, Ordering::Relaxed);
        }
    }

    fn flush_nodes(&mut self) {
        self.add_nodes(self.nodes & 255);
    }

    /// Smallest cell count still worth reaching.
    fn threshold(&self) -> usize {
        if let Some(t) = self.e.target() {
            return t;
        }
        let shared = self.e.shared.best.load(Ordering::Relaxed);
        let best = shared.max(self.local.best);
        match self.e.objective {
            Objective::FindMax => best + 1,
            _ => best.max(1),
        }
    }

    fn record(&mut self, cells: &[usize]) {
        let k = cells.len();
        if let Some(t) = self.e.target() {
            if k == t {
                self.local.best = t;
                self.local.solutions.push(cells.to_vec());
            }
            return;
        }
        if k > self.local.best {
            self.local.best = k;
            self.local.solutions.clear();
            self.e.shared.best.fetch_max(k, Ordering::Relaxed);
        }
        if k == self.local.best {
            match self.e.objective {
                Objective::FindMax => {
                    if self.local.solutions.is_empty() {
                        self.local.solutions.push(cells.to_vec());
                    }
                }
                _ => self.local.solutions.push(cells.to_vec()),
            }
        }
    }

    /// Records the current path if it is a solution in path mode.
    fn record_path_node(&mut self) {
        if self.e.mode != Mode::Path {
            return;
        }
        let first = self.path[0];
        let last = self.head();
        if self.e.symmetry || self.path.len() == 1 || first < last {
            let cells = self.path.clone();
            self.record(&cells);
        }
    }

    fn candidates(&self) -> Mask {
        self.e.ig.adj[self.head()] & !self.blocked & self.allowed
    }

    /// Depth-first search from the current state. With `split`, stops at
    /// that many cells and reports the prefix instead of descending.
    fn dfs(&mut self, split: Option<usize>, prefixes: &mut Vec<Vec<usize>>) {
        if !self.tick() {
            return;
        }
        if split == Some(self.path.len()) {
            prefixes.push(self.path.clone());
            return;
        }
        self.record_path_node();
        if self.e.target() == Some(self.path.len()) && self.e.mode == Mode::Path {
            return;
        }
        let cand = self.candidates();
        let ig = self.e.ig;
        let len = self.path.len();
        let avail = self.allowed & !self.blocked;
        let reach = ig.reach(bit(self.head()), avail);
        let mut closers = 0;
        if self.e.mode == Mode::Cycle && len >= 2 {
            closers = cand & ig.adj[self.start];
            if closers == 0 && reach & ig.adj[self.start] == 0 {
                return;
            }
        }
        if len + self.e.bound(reach) < self.threshold() {
            return;
        }
        for c in ones(closers) {
            if len >= 3 && self.path[1] < c {
                let mut cells = self.path.clone();
                cells.push(c);
                self.record(&cells);
            }
        }
        for c in ones(cand & !closers) {
            if self.e.mode == Mode::Cycle && self.e.target().is_some_and(|t| len + 1 >= t) {
                break;
            }
            let saved = self.push(c);
            self.dfs(split, prefixes);
            self.pop(saved);
        }
    }
}

fn king_blocks(ig: &IndexedGraph) -> Vec<Vec<Mask>> {
    if ig.graph.rule != MoveRule::King {
        return Vec::new();
    }
    let b = ig.graph.board;
    let o = b.origin();
    let mut out = Vec::new();
    for oy in 0..2 {
        for ox in 0..2 {
            let mut fam: BTreeMap<(i32, i32), Mask> = BTreeMap::new();
            for (i, &c) in ig.cells.iter().enumerate() {
                let key = (
                    (c.x - o.x + ox).div_euclid(2),
                    (c.y - o.y + oy).div_euclid(2),
                );
                *fam.entry(key).or_default() |= bit(i);
            }
            out.push(fam.into_values().collect());
        }
    }
    out
}

fn run(
    graph: &PieceGraph,
    opts: &SearchOptions,
    checkpoint: Option<&std::path::Path>,
) -> Result<SearchResult> {
    if opts.node_budget == 0 {
        return Err(invalid("node budget must be positive"));
    }
    let ig = IndexedGraph::new(*graph)?;
    let engine = Engine {
        ig: &ig,
        mode: opts.mode,
        objective: opts.objective,
        symmetry: opts.symmetry,
        blocks: king_blocks(&ig),
        shared: Shared {
            best: AtomicUsize::new(0),
            nodes: AtomicU64::new(0),
            budget: opts.node_budget,
            aborted: AtomicBool::new(false),
        },
    };

    // Shallow part of the tree, run serially, yields the work units.
    let split = opts.split_depth.max(2);
    let mut root = UnitResult::default();
    let mut units: Vec<(usize, Mask, Vec<usize>)> = Vec::new();
    for (s, allowed) in engine.starts() {
        let mut w = Worker::new(&engine, s, allowed);
        let mut prefixes = Vec::new();
        w.dfs(Some(split), &mut prefixes);
        w.flush_nodes();
        merge_unit(&mut root, w.local, opts.objective);
        units.extend(prefixes.into_iter().map(|p| (s, allowed, p)));
    }

    let mut done: BTreeMap<usize, UnitResult> = BTreeMap::new();
    let mut ck = match checkpoint {
        Some(p) => Some(Checkpoint::open(p, &checkpoint_header(graph, opts))?),
        None => None,
    };
    if let Some(ck) = &ck {
        done = ck.completed().clone();
        for r in done.values() {
            engine.shared.best.fetch_max(r.best, Ordering::Relaxed);
        }
    }
    engine.shared.best.fetch_max(root.best, Ordering::Relaxed);

    let pending: Vec<usize> = (0..units.len()).filter(|i| !done.contains_key(i)).collect();
    let run_unit = |i: usize| -> Option<(usize, UnitResult)> {
        let (s, allowed, prefix) = &units[i];
        let mut w = Worker::new(&engine, *s, *allowed);
        for &c in &prefix[1..] {
            w.push(c);
        }
        w.dfs(None, &mut Vec::new());
        w.flush_nodes();
        if engine.shared.aborted.load(Ordering::Relaxed) {
            None
        } else {
            Some((i, w.local))
        }
    };

    let (tx, rx) = std::sync::mpsc::channel::<(usize, UnitResult)>();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers)
        .build()
        .map_err(|e| invalid(format!("thread pool: {e}")))?;
    std::thread::scope(|scope| -> Result<()> {
        let writer = scope.spawn(|| -> Result<BTreeMap<usize, UnitResult>> {
            let mut fresh = BTreeMap::new();
            for (i, r) in rx {
                if let Some(ck) = ck.as_mut() {
                    ck.record(i, &r)?;
                }
                fresh.insert(i, r);
            }
            Ok(fresh)
        });
        pool.install(|| {
            pending.par_iter().for_each_with(tx, |tx, &i| {
                if let Some(r) = run_unit(i) {
                    let _ = tx.send(r);
                }
            })
        });
        let fresh = writer.join().expect("checkpoint writer panicked")?;
        done.extend(fresh);
        Ok(())
    })?;

    let mut merged = root;
    for r in done.into_values() {
        merge_unit(&mut merged, r, opts.objective);
    }
    let exhausted = !engine.shared.aborted.load(Ordering::Relaxed);
    let nodes = engine.shared.nodes.load(Ordering::Relaxed);
    Ok(finish(graph, opts, &ig, merged, nodes, exhausted))
}

fn merge_unit(acc: &mut UnitResult, r: UnitResult, objective: Objective) {
    if r.best > acc.best && !matches!(objective, Objective::EnumerateLength(_)) {
        *acc = r;
    } else if r.best == acc.best || matches!(objective, Objective::EnumerateLength(_)) {
        acc.best = acc.best.max(r.best);
        acc.solutions.extend(r.solutions);
    }
}

pub(crate) fn checkpoint_header(graph: &PieceGraph, opts: &SearchOptions) -> String {
    format!(
        "{} {} {} {:?} {:?} symmetry={} split={}",
        graph.rule,
        graph.board.height(),
        graph.board.width(),
        opts.mode,
        opts.objective,
        opts.symmetry,
        opts.split_depth.max(2)
    )
}

fn finish(
    graph: &PieceGraph,
    opts: &SearchOptions,
    ig: &IndexedGraph,
    merged: UnitResult,
    nodes: u64,
    exhausted: bool,
) -> SearchResult {
    let board = graph.board;
    let to_path = |idx: &Vec<usize>| {
        let cells: Vec<Cell> = idx.iter().map(|&i| ig.cells[i]).collect();
        CellPath::from_parts(cells, opts.mode == Mode::Cycle).normalized()
    };
    let mut reps: BTreeMap<_, (CellPath, usize)> = BTreeMap::new();
    let mut found: Vec<CellPath> = Vec::new();
    for idx in &merged.solutions {
        let p = to_path(idx);
        let can = canonicalize(&board, &p);
        reps.entry(crate::symmetry::Canonicalize::key(&can.rep))
            .or_insert((can.rep, can.class_size));
        found.push(p);
    }
    let mut solutions: Vec<CellPath> = if opts.symmetry {
        let mut all = Vec::new();
        for (rep, _) in reps.values() {
            for g in Symmetry::group(&board) {
                all.push(g.apply_path(&board, rep).normalized());
            }
        }
        all
    } else {
        found
    };
    solutions.sort_by_key(|p| p.cells().to_vec());
    solutions.dedup();
    let representatives: Vec<CellPath> = reps.values().map(|(p, _)| p.clone()).collect();
    let total_count = if opts.symmetry {
        reps.values().map(|(_, k)| *k as u64).sum()
    } else {
        solutions.len() as u64
    };
    let max_length = (!merged.solutions.is_empty()).then(|| edges_of(opts.mode, merged.best));
    if opts.objective == Objective::FindMax {
        solutions.truncate(1);
    }
    SearchResult {
        max_length,
        total_count: if opts.objective == Objective::FindMax {
            solutions.len() as u64
        } else {
            total_count
        },
        distinct_count: representatives.len(),
        representatives,
        solutions,
        nodes,
        exhausted,
    }
}
