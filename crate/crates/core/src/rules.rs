//! Piece move rules.

use std::fmt;
use std::str::FromStr;

use crate::cell::Cell;
use crate::error::{invalid, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveRule {
    King,
    Knight,
    /// Orthogonal unit steps; the grid graph.
    Wazir,
    /// Diagonal unit steps.
    Fers,
    /// Moves `(±p, ±q)` and `(±q, ±p)` with `p <= q`.
    Leaper(u32, u32),
}

impl MoveRule {
    /// Leaper with the pair sorted; rejects `(0, 0)`.
    pub fn leaper(p: u32, q: u32) -> Result<MoveRule> {
        if p == 0 && q == 0 {
            return Err(invalid("leaper (0,0) has no moves"));
        }
        Ok(MoveRule::Leaper(p.min(q), p.max(q)))
    }

    /// The leaper pair equivalent to this rule, if any.
    pub fn as_leaper(self) -> Option<(u32, u32)> {
        match self {
            MoveRule::King => None,
            MoveRule::Knight => Some((1, 2)),
            MoveRule::Wazir => Some((0, 1)),
            MoveRule::Fers => Some((1, 1)),
            MoveRule::Leaper(p, q) => Some((p, q)),
        }
    }

    pub fn adjacent(self, a: Cell, b: Cell) -> bool {
        let dx = (a.x - b.x).unsigned_abs();
        let dy = (a.y - b.y).unsigned_abs();
        match self {
            MoveRule::King => dx <= 1 && dy <= 1 && (dx, dy) != (0, 0),
            _ => {
                let (p, q) = self.as_leaper().expect("leaper rule");
                (dx.min(dy), dx.max(dy)) == (p, q)
            }
        }
    }

    /// Distinct move vectors, sorted.
    pub fn moves(self) -> Vec<Cell> {
        let mut out = Vec::new();
        match self.as_leaper() {
            None => {
                for dy in -1..=1 {
                    for dx in -1..=1 {
                        if (dx, dy) != (0, 0) {
                            out.push(Cell::new(dx, dy));
                        }
                    }
                }
            }
            Some((p, q)) => {
                let (p, q) = (p as i32, q as i32);
                for (a, b) in [(p, q), (q, p)] {
                    for sa in [-1, 1] {
                        for sb in [-1, 1] {
                            out.push(Cell::new(sa * a, sb * b));
                        }
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Largest coordinate displacement of a single move.
    pub fn reach(self) -> u32 {
        self.as_leaper().map_or(1, |(_, q)| q)
    }
}

impl fmt::Display for MoveRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveRule::King => f.write_str("king"),
            MoveRule::Knight => f.write_str("knight"),
            MoveRule::Wazir => f.write_str("wazir"),
            MoveRule::Fers => f.write_str("fers"),
            MoveRule::Leaper(p, q) => write!(f, "leaper:{p},{q}"),
        }
    }
}

impl FromStr for MoveRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "king" => Ok(MoveRule::King),
            "knight" => Ok(MoveRule::Knight),
            "wazir" | "grid" => Ok(MoveRule::Wazir),
            "fers" => Ok(MoveRule::Fers),
            _ => {
                let rest = s
                    .strip_prefix("leaper:")
                    .ok_or_else(|| invalid(format!("unknown rule `{s}`")))?;
                let (p, q) = rest
                    .split_once(',')
                    .ok_or_else(|| invalid(format!("leaper needs `p,q`, got `{rest}`")))?;
                let p = p
                    .trim()
                    .parse()
                    .map_err(|_| invalid(format!("bad p in `{s}`")))?;
                let q = q
                    .trim()
                    .parse()
                    .map_err(|_| invalid(format!("bad q in `{s}`")))?;
                MoveRule::leaper(p, q)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_adjacency_examples() {
        assert!(MoveRule::King.adjacent(Cell::new(0, 0), Cell::new(1, 1)));
        assert!(!MoveRule::Knight.adjacent(Cell::new(0, 0), Cell::new(0, 1)));
        assert!(MoveRule::Leaper(1, 3).adjacent(Cell::new(0, 0), Cell::new(1, 3)));
        assert!(!MoveRule::King.adjacent(Cell::new(2, 2), Cell::new(2, 2)));
    }

    #[test]
    fn move_counts() {
        assert_eq!(MoveRule::King.moves().len(), 8);
        assert_eq!(MoveRule::Knight.moves().len(), 8);
        assert_eq!(MoveRule::Wazir.moves().len(), 4);
        assert_eq!(MoveRule::Fers.moves().len(), 4);
        assert_eq!(MoveRule::Leaper(0, 2).moves().len(), 4);
        assert_eq!(MoveRule::Leaper(2, 2).moves().len(), 4);
    }

    #[test]
    fn parse_round_trip() {
        for r in [
            MoveRule::King,
            MoveRule::Knight,
            MoveRule::Wazir,
            MoveRule::Fers,
            MoveRule::Leaper(2, 3),
        ] {
            assert_eq!(r.to_string().parse::<MoveRule>().unwrap(), r);
        }
        assert_eq!(
            "leaper:3,1".parse::<MoveRule>().unwrap(),
            MoveRule::Leaper(1, 3)
        );
        assert!("leaper:0,0".parse::<MoveRule>().is_err());
        assert!("queen".parse::<MoveRule>().is_err());
    }
}
