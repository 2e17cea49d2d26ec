//! Piece graphs on boards and the induced-subgraph predicates.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;

use crate::cell::{Board, Cell, CellPath, CellSet};
use crate::error::{Error, Result};
use crate::rules::MoveRule;

/// The graph of a move rule restricted to a board.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PieceGraph {
    pub rule: MoveRule,
    pub board: Board,
}

/// The first reason a candidate path, cycle or set fails its predicate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    OffBoard(Cell),
    Repeated(Cell),
    NotAdjacent(Cell, Cell),
    /// Two cells of the object are adjacent but not consecutive.
    Chord(Cell, Cell),
    /// Induced degree above the allowed maximum.
    Degree(Cell, usize),
    TooShort(usize),
    WrongClosure,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OffBoard(c) => write!(f, "cell {c} is off the board"),
            Violation::Repeated(c) => write!(f, "cell {c} appears twice"),
            Violation::NotAdjacent(a, b) => {
                write!(f, "consecutive cells {a} and {b} are not adjacent")
            }
            Violation::Chord(a, b) => write!(f, "chord between {a} and {b}"),
            Violation::Degree(c, d) => write!(f, "cell {c} has induced degree {d}"),
            Violation::TooShort(k) => write!(f, "only {k} cells"),
            Violation::WrongClosure => write!(f, "open/closed flag does not match the check"),
        }
    }
}

/// Adjacency under a move rule, independent of any board.
pub fn adjacent(rule: MoveRule, a: Cell, b: Cell) -> bool {
    rule.adjacent(a, b)
}

impl PieceGraph {
    pub fn new(rule: MoveRule, board: Board) -> Self {
        PieceGraph { rule, board }
    }

    /// Square `n x n` board at the origin.
    pub fn square(rule: MoveRule, n: u32) -> Result<Self> {
        Ok(PieceGraph::new(rule, Board::square(n)?))
    }

    /// Smallest board graph containing `cells`; `None` when empty.
    pub fn around<'a>(rule: MoveRule, cells: impl IntoIterator<Item = &'a Cell>) -> Option<Self> {
        Board::bounding(cells).map(|b| PieceGraph::new(rule, b))
    }

    pub fn adjacent(&self, a: Cell, b: Cell) -> bool {
        self.rule.adjacent(a, b)
    }

    /// On-board neighbours in sorted order.
    pub fn neighbor_iter(&self, a: Cell) -> impl Iterator<Item = Cell> + '_ {
        self.rule
            .moves()
            .into_iter()
            .map(move |d| a + d)
            .filter(|c| self.board.contains(*c))
    }

    pub fn neighbors(&self, a: Cell) -> Result<CellSet> {
        if !self.board.contains(a) {
            return Err(Error::OffBoard(a));
        }
        Ok(self.neighbor_iter(a).collect())
    }

    pub fn induced_degree(&self, s: &CellSet, a: Cell) -> Result<usize> {
        if !s.contains(a) {
            return Err(Error::NotMember(a));
        }
        Ok(set_degree(self.rule, s, a))
    }

    /// Every cell of `s` on the board and every induced degree at most 2.
    pub fn check_pseudosnake(&self, s: &CellSet) -> std::result::Result<(), Violation> {
        for c in s.iter() {
            if !self.board.contains(c) {
                return Err(Violation::OffBoard(c));
            }
        }
        check_max_degree(self.rule, s, 2)
    }

    pub fn is_pseudosnake(&self, s: &CellSet) -> bool {
        self.check_pseudosnake(s).is_ok()
    }

    pub fn check_snake_path(&self, p: &CellPath) -> std::result::Result<(), Violation> {
        if p.is_closed() {
            return Err(Violation::WrongClosure);
        }
        self.check_chordless(p)
    }

    pub fn is_snake_path(&self, p: &CellPath) -> bool {
        self.check_snake_path(p).is_ok()
    }

    /// Cycles must have at least 4 cells; a triangle never counts.
    pub fn check_snake_cycle(&self, p: &CellPath) -> std::result::Result<(), Violation> {
        if !p.is_closed() {
            return Err(Violation::WrongClosure);
        }
        if p.cells().len() < 4 {
            return Err(Violation::TooShort(p.cells().len()));
        }
        self.check_chordless(p)
    }

    pub fn is_snake_cycle(&self, p: &CellPath) -> bool {
        self.check_snake_cycle(p).is_ok()
    }

    pub fn check_snake(&self, p: &CellPath) -> std::result::Result<(), Violation> {
        if p.is_closed() {
            self.check_snake_cycle(p)
        } else {
            self.check_snake_path(p)
        }
    }

    fn check_chordless(&self, p: &CellPath) -> std::result::Result<(), Violation> {
        let cells = p.cells();
        if cells.is_empty() {
            return Err(Violation::TooShort(0));
        }
        let mut pos: BTreeMap<Cell, usize> = BTreeMap::new();
        for (i, &c) in cells.iter().enumerate() {
            if !self.board.contains(c) {
                return Err(Violation::OffBoard(c));
            }
            if pos.insert(c, i).is_some() {
                return Err(Violation::Repeated(c));
            }
        }
        for (a, b) in p.edges() {
            if !self.adjacent(a, b) {
                return Err(Violation::NotAdjacent(a, b));
            }
        }
        let k = cells.len();
        for (i, &c) in cells.iter().enumerate() {
            for d in self.rule.moves() {
                let Some(&j) = pos.get(&(c + d)) else {
                    continue;
                };
                if j <= i {
                    continue;
                }
                let consecutive = j == i + 1 || (p.is_closed() && i == 0 && j == k - 1);
                if !consecutive {
                    return Err(Violation::Chord(c, cells[j]));
                }
            }
        }
        Ok(())
    }
}

/// Number of members of `s` adjacent to `a`.
pub fn set_degree(rule: MoveRule, s: &CellSet, a: Cell) -> usize {
    rule.moves()
        .into_iter()
        .filter(|&d| s.contains(a + d))
        .count()
}

/// Checks induced degrees on an unbounded plane.
pub fn check_max_degree(
    rule: MoveRule,
    s: &CellSet,
    max: usize,
) -> std::result::Result<(), Violation> {
    for c in s.iter() {
        let d = set_degree(rule, s, c);
        if d > max {
            return Err(Violation::Degree(c, d));
        }
    }
    Ok(())
}

/// Connected components of the induced graph on `s`, each sorted, listed by
/// smallest cell.
pub fn components(rule: MoveRule, s: &CellSet) -> Vec<CellSet> {
    let moves = rule.moves();
    let mut seen: HashSet<Cell> = HashSet::new();
    let mut out = Vec::new();
    for start in s.iter() {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = CellSet::new();
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            comp.insert(c);
            for &d in &moves {
                let e = c + d;
                if s.contains(e) && seen.insert(e) {
                    queue.push_back(e);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// Orders a set whose induced graph is a single path (or a single cell),
/// starting from the smaller endpoint.
pub fn trace_path(rule: MoveRule, s: &CellSet) -> Option<CellPath> {
    let first = s.iter().next()?;
    if s.len() == 1 {
        return Some(CellPath::open(vec![first]));
    }
    let ends: Vec<Cell> = s.iter().filter(|&c| set_degree(rule, s, c) == 1).collect();
    if ends.len() != 2 {
        return None;
    }
    let walk = walk(rule, s, ends[0])?;
    (walk.len() == s.len()).then(|| CellPath::open(walk))
}

/// Orders a set whose induced graph is a single cycle of length at least 4,
/// normalized.
pub fn trace_cycle(rule: MoveRule, s: &CellSet) -> Option<CellPath> {
    let first = s.iter().next()?;
    if s.len() < 4 || s.iter().any(|c| set_degree(rule, s, c) != 2) {
        return None;
    }
    let walk = walk(rule, s, first)?;
    (walk.len() == s.len()).then(|| CellPath::closed(walk).normalized())
}

/// Follows degree-≤2 cells from `start` until no unvisited neighbour is left.
fn walk(rule: MoveRule, s: &CellSet, start: Cell) -> Option<Vec<Cell>> {
    let moves = rule.moves();
    let mut out = vec![start];
    let mut visited = HashSet::from([start]);
    let mut cur = start;
    loop {
        let next = moves
            .iter()
            .map(|&d| cur + d)
            .find(|&e| s.contains(e) && !visited.contains(&e));
        match next {
            Some(e) => {
                visited.insert(e);
                out.push(e);
                cur = e;
            }
            None => return Some(out),
        }
    }
}
