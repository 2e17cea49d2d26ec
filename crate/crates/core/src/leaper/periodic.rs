//! Doubly periodic pseudosnakes of leaper graphs on the whole plane.

use num_rational::Ratio;

use crate::cell::{Board, Cell, CellSet};
use crate::error::{invalid, Result};
use crate::graph::{components, set_degree, trace_path};
use crate::rules::MoveRule;

/// A set of cells of the plane invariant under translation by
/// `(width, 0)` and `(0, height)`, stored by its members in the
/// fundamental domain `[0; width) x [0; height)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicPattern {
    width: i32,
    height: i32,
    members: CellSet,
}

impl PeriodicPattern {
    /// The pattern generated by `contains` on the fundamental domain.
    pub fn from_predicate(
        width: u32,
        height: u32,
        contains: impl Fn(Cell) -> bool,
    ) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(invalid("periods must be non-zero"));
        }
        let (width, height) = (width as i32, height as i32);
        let members = (0..height)
            .flat_map(|y| (0..width).map(move |x| Cell::new(x, y)))
            .filter(|&c| contains(c))
            .collect();
        Ok(PeriodicPattern {
            width,
            height,
            members,
        })
    }

    pub fn periods(&self) -> (Cell, Cell) {
        (Cell::new(self.width, 0), Cell::new(0, self.height))
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.members.contains(Cell::new(
            c.x.rem_euclid(self.width),
            c.y.rem_euclid(self.height),
        ))
    }

    pub fn density(&self) -> Ratio<u64> {
        Ratio::new(self.members.len() as u64, (self.width * self.height) as u64)
    }

    /// Members inside `board`.
    pub fn window(&self, board: &Board) -> CellSet {
        board.cells().filter(|&c| self.contains(c)).collect()
    }

    /// Every member of `board` at least `margin` from its edge has exactly
    /// `degree` neighbours in the pattern.
    pub fn interior_degree_is(
        &self,
        rule: MoveRule,
        board: &Board,
        margin: i32,
        degree: usize,
    ) -> bool {
        let o = board.origin();
        let (w, h) = (board.width() as i32, board.height() as i32);
        let s = self.window(board);
        s.iter()
            .filter(|c| {
                let d = *c - o;
                d.x >= margin && d.y >= margin && d.x < w - margin && d.y < h - margin
            })
            .all(|c| {
                rule.moves()
                    .into_iter()
                    .filter(|&v| self.contains(c + v))
                    .count()
                    == degree
            })
            && s.iter().all(|c| set_degree(rule, &s, c) <= degree)
    }

    /// No component of the pattern inside `board` closes up into a cycle.
    pub fn window_is_acyclic(&self, rule: MoveRule, board: &Board) -> bool {
        components(rule, &self.window(board))
            .iter()
            .all(|c| trace_path(rule, c).is_some())
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A density 1/2 pseudosnake of the skew free `(p, q)`-leaper in which
/// every cell has degree two: vertical strips of width two when the even
/// member of `{p, q}` is `2 mod 4`, staggered strips when it is `0 mod 4`.
pub fn build_leaper_pseudosnake(p: u32, q: u32) -> Result<PeriodicPattern> {
    if p == 0 || p >= q || (p + q).is_multiple_of(2) || gcd(p, q) != 1 {
        return Err(invalid(format!(
            "({p},{q}) is not a skew free leaper with p < q"
        )));
    }
    let r = if p.is_multiple_of(2) { p } else { q };
    if r % 4 == 2 {
        PeriodicPattern::from_predicate(4, 1, |c| c.x.div_euclid(2) % 2 == 0)
    } else {
        PeriodicPattern::from_predicate(4, 2, |c| (c.x.div_euclid(2) + c.y) % 2 == 0)
    }
}

/// Copies of `p_set` (a pseudosnake of the `m x n` board for a leaper of
/// reach `q`) repeated with periods `n + q` and `m + q`.
pub fn upsilon_tile(m: u32, n: u32, p_set: &CellSet, q: u32) -> Result<PeriodicPattern> {
    let board = Board::new(m, n)?;
    if let Some(c) = p_set.iter().find(|&c| !board.contains(c)) {
        return Err(crate::error::Error::OffBoard(c));
    }
    PeriodicPattern::from_predicate(n + q, m + q, |c| p_set.contains(c))
}

/// The free leaper `((q - p)/2, (p + q)/2)` of a half-free `(p, q)`-leaper.
pub fn free_counterpart(p: u32, q: u32) -> Result<(u32, u32)> {
    let (p, q) = (p.min(q), p.max(q));
    if (p + q) % 2 == 1 || gcd(p, q) != 1 {
        return Err(invalid(format!("({p},{q}) is not a half-free leaper")));
    }
    Ok(((q - p) / 2, (p + q) / 2))
}

/// `(x, y) -> ((x - y + e)/2, (x + y + e)/2)` on cells with `x + y ≡ e`.
pub fn halffree_fold(cells: &CellSet, epsilon: u8) -> Result<CellSet> {
    if epsilon > 1 {
        return Err(invalid("epsilon is 0 or 1"));
    }
    let e = epsilon as i32;
    cells
        .iter()
        .map(|c| {
            if (c.x + c.y).rem_euclid(2) != e {
                return Err(invalid(format!("{c} does not have parity {e}")));
            }
            Ok(Cell::new(
                (c.x - c.y + e).div_euclid(2),
                (c.x + c.y + e).div_euclid(2),
            ))
        })
        .collect()
}

/// Inverse of [`halffree_fold`].
pub fn halffree_unfold(cells: &CellSet, epsilon: u8) -> CellSet {
    let e = epsilon as i32;
    cells
        .iter()
        .map(|c| Cell::new(c.x + c.y - e, c.y - c.x))
        .collect()
}
