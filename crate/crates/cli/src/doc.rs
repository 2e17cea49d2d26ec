//! The line-oriented document format.
//!
//! ```text
//! snake/1 <rule> <m> <n> <kind>
//! x y [weight]
//! ```
//!
//! `m` is the board height and `n` its width; cells satisfy `0 <= x < n`
//! and `0 <= y < m`. Weights appear exactly when the kind is
//! `weighted-set`. Blank lines and lines starting with `#` are skipped.

use std::fmt;
use std::str::FromStr;

use snake_core::knight::WeightedCellSet;
use snake_core::{Board, Cell, CellPath, CellSet, MoveRule};
use thiserror::Error;

pub const FORMAT_TAG: &str = "snake/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Path,
    Cycle,
    Set,
    WeightedSet,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Path => "path",
            Kind::Cycle => "cycle",
            Kind::Set => "set",
            Kind::WeightedSet => "weighted-set",
        })
    }
}

impl FromStr for Kind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "path" => Ok(Kind::Path),
            "cycle" => Ok(Kind::Cycle),
            "set" => Ok(Kind::Set),
            "weighted-set" => Ok(Kind::WeightedSet),
            _ => Err(format!("unknown kind `{s}`")),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub rule: MoveRule,
    pub m: u32,
    pub n: u32,
    pub kind: Kind,
    pub cells: Vec<Cell>,
    /// One per cell for weighted sets, empty otherwise.
    pub weights: Vec<u64>,
}

impl Document {
    pub fn path(rule: MoveRule, m: u32, n: u32, p: &CellPath) -> Self {
        Document {
            rule,
            m,
            n,
            kind: if p.is_closed() {
                Kind::Cycle
            } else {
                Kind::Path
            },
            cells: p.cells().to_vec(),
            weights: Vec::new(),
        }
    }

    pub fn set(rule: MoveRule, m: u32, n: u32, s: &CellSet) -> Self {
        Document {
            rule,
            m,
            n,
            kind: Kind::Set,
            cells: s.iter().collect(),
            weights: Vec::new(),
        }
    }

    pub fn weighted(rule: MoveRule, m: u32, n: u32, g: &WeightedCellSet) -> Self {
        Document {
            rule,
            m,
            n,
            kind: Kind::WeightedSet,
            cells: g.iter().map(|t| t.0).collect(),
            weights: g.iter().map(|t| t.1).collect(),
        }
    }

    pub fn board(&self) -> Board {
        Board::new(self.m, self.n).expect("parsed documents have a positive board")
    }

    pub fn cell_path(&self) -> CellPath {
        CellPath::from_parts(self.cells.clone(), self.kind == Kind::Cycle)
    }

    pub fn cell_set(&self) -> CellSet {
        self.cells.iter().copied().collect()
    }

    /// Weighted view; unweighted kinds get weight 1 per cell.
    pub fn weighted_set(&self) -> WeightedCellSet {
        if self.kind == Kind::WeightedSet {
            WeightedCellSet::from_weights(
                self.cells.iter().copied().zip(self.weights.iter().copied()),
            )
            .expect("parsed weights are positive and distinct")
        } else {
            WeightedCellSet::uniform(&self.cell_set())
        }
    }

    pub fn emit(&self) -> String {
        let mut out = format!(
            "{FORMAT_TAG} {} {} {} {}\n",
            self.rule, self.m, self.n, self.kind
        );
        for (i, c) in self.cells.iter().enumerate() {
            match self.weights.get(i) {
                Some(w) => out.push_str(&format!("{} {} {w}\n", c.x, c.y)),
                None => out.push_str(&format!("{} {}\n", c.x, c.y)),
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hl, header) = lines.next().ok_or_else(|| err(1, "empty document"))?;
        let tok: Vec<&str> = header.split_whitespace().collect();
        if tok.len() != 5 {
            return Err(err(hl, "header must read `snake/1 <rule> <m> <n> <kind>`"));
        }
        if tok[0] != FORMAT_TAG {
            return Err(err(hl, format!("unsupported format `{}`", tok[0])));
        }
        let rule: MoveRule = tok[1].parse().map_err(|e| err(hl, format!("{e}")))?;
        let dim = |s: &str| -> Result<u32, ParseError> {
            match s.parse::<u32>() {
                Ok(v) if v > 0 => Ok(v),
                _ => Err(err(
                    hl,
                    format!("board side `{s}` is not a positive integer"),
                )),
            }
        };
        let (m, n) = (dim(tok[2])?, dim(tok[3])?);
        let kind: Kind = tok[4].parse().map_err(|e: String| err(hl, e))?;
        let mut doc = Document {
            rule,
            m,
            n,
            kind,
            cells: Vec::new(),
            weights: Vec::new(),
        };
        let mut seen = CellSet::new();
        for (ln, line) in lines {
            let f: Vec<&str> = line.split_whitespace().collect();
            let want = if kind == Kind::WeightedSet { 3 } else { 2 };
            if f.len() != want {
                return Err(err(
                    ln,
                    format!("expected {want} fields, found {}", f.len()),
                ));
            }
            let coord = |s: &str| {
                s.parse::<i32>()
                    .map_err(|_| err(ln, format!("bad coordinate `{s}`")))
            };
            let c = Cell::new(coord(f[0])?, coord(f[1])?);
            if c.x < 0 || c.y < 0 || c.x >= n as i32 || c.y >= m as i32 {
                return Err(err(ln, format!("cell {c} is off the {m} x {n} board")));
            }
            if matches!(kind, Kind::Set | Kind::WeightedSet) && !seen.insert(c) {
                return Err(err(ln, format!("cell {c} is listed twice")));
            }
            if kind == Kind::WeightedSet {
                match f[2].parse::<u64>() {
                    Ok(w) if w > 0 => doc.weights.push(w),
                    _ => {
                        return Err(err(
                            ln,
                            format!("weight `{}` is not a positive integer", f[2]),
                        ))
                    }
                }
            }
            doc.cells.push(c);
        }
        Ok(doc)
    }
}

/// Shifts `cells` so the smallest coordinates are 0 and returns the shift
/// together with the bounding height and width.
pub fn fit(cells: impl IntoIterator<Item = Cell>) -> (Cell, u32, u32) {
    let v: Vec<Cell> = cells.into_iter().collect();
    let Some(b) = Board::bounding(v.iter()) else {
        return (Cell::new(0, 0), 1, 1);
    };
    let o = b.origin();
    (Cell::new(-o.x, -o.y), b.height(), b.width())
}
