//! DIMACS CNF encoding of "a pseudosnake of weight at least `target`
//! exists", and a small DPLL solver for checking it.
//!
//! Variables: cell `i` of the instance in cell order is `x_i = i + 1`.
//! For cell `i` and `1 <= j <= target`, `s_{i,j} = N + (i - 1) target + j`
//! (cells numbered from 1) means "cells 1..=i carry weight at least `j`".
//!
//! Clauses, in this order:
//! 1. for each cell `a` in order and each 3-subset `{b, c, d}` of its
//!    neighbours in lexicographic order: `-a -b -c -d`;
//! 2. for `i = 1..=N`, `j = 1..=target`: `-s_{i,j} s_{i-1,j} x_i`, then,
//!    when `j > w_i`, `-s_{i,j} s_{i-1,j} s_{i-1,j-w_i}`; literals `s_{0,j}`
//!    are false and dropped;
//! 3. the unit clause `s_{N,target}`.
//!
//! A target of 0 gives the empty formula.

use sha2::{Digest, Sha256};

use crate::cell::Cell;
use crate::error::{invalid, Result};
use crate::knight::WeightedCellSet;
use crate::rules::MoveRule;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cnf {
    pub vars: usize,
    pub clauses: Vec<Vec<i64>>,
}

/// SHA-256 of the instance listed as `x y w` lines in cell order.
pub fn instance_hash(g: &WeightedCellSet) -> String {
    let mut h = Sha256::new();
    for (c, w) in g.iter() {
        h.update(format!("{} {} {}\n", c.x, c.y, w));
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

pub fn density_cnf(g: &WeightedCellSet, rule: MoveRule, target: u64) -> Cnf {
    let cells: Vec<(Cell, u64)> = g.iter().collect();
    let n = cells.len();
    let t = target as usize;
    let mut clauses = Vec::new();
    for (a, &(ca, _)) in cells.iter().enumerate() {
        let nb: Vec<usize> = (0..n).filter(|&b| rule.adjacent(ca, cells[b].0)).collect();
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                for k in j + 1..nb.len() {
                    clauses.push(vec![
                        -(a as i64 + 1),
                        -(nb[i] as i64 + 1),
                        -(nb[j] as i64 + 1),
                        -(nb[k] as i64 + 1),
                    ]);
                }
            }
        }
    }
    if t == 0 {
        return Cnf {
            vars: n,
            clauses: Vec::new(),
        };
    }
    let s = |i: usize, j: usize| (n + (i - 1) * t + j) as i64;
    for i in 1..=n {
        let w = cells[i - 1].1 as usize;
        for j in 1..=t {
            let mut first = vec![-s(i, j)];
            if i > 1 {
                first.push(s(i - 1, j));
            }
            first.push(i as i64);
            clauses.push(first);
            if j > w {
                let mut second = vec![-s(i, j)];
                if i > 1 {
                    second.push(s(i - 1, j));
                    second.push(s(i - 1, j - w));
                }
                clauses.push(second);
            }
        }
    }
    if n == 0 {
        clauses.push(vec![]);
        return Cnf { vars: 0, clauses };
    }
    clauses.push(vec![s(n, t)]);
    Cnf {
        vars: n + n * t,
        clauses,
    }
}

/// The DIMACS text, with comment lines recording the instance hash, rule
/// and target.
pub fn export_density_instance(g: &WeightedCellSet, rule: MoveRule, target: u64) -> String {
    let cnf = density_cnf(g, rule, target);
    let mut out = format!(
        "c snake density instance\nc sha256 {}\nc rule {}\nc target {}\np cnf {} {}\n",
        instance_hash(g),
        rule,
        target,
        cnf.vars,
        cnf.clauses.len()
    );
    for c in &cnf.clauses {
        for l in c {
            out.push_str(&format!("{l} "));
        }
        out.push_str("0\n");
    }
    out
}

pub fn parse_dimacs(text: &str) -> Result<Cnf> {
    let mut vars = None;
    let mut clauses = Vec::new();
    let mut cur = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("p cnf") {
            let nums: Vec<usize> = rest
                .split_whitespace()
                .map(str::parse)
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| invalid("bad problem line"))?;
            vars = nums.first().copied();
            continue;
        }
        for tok in line.split_whitespace() {
            let l: i64 = tok
                .parse()
                .map_err(|_| invalid(format!("bad literal {tok}")))?;
            if l == 0 {
                clauses.push(std::mem::take(&mut cur));
            } else {
                cur.push(l);
            }
        }
    }
    let vars = vars.ok_or_else(|| invalid("missing problem line"))?;
    Ok(Cnf { vars, clauses })
}

/// A satisfying assignment (index 0 unused) or `None`.
pub fn dpll(cnf: &Cnf) -> Option<Vec<bool>> {
    let mut assign: Vec<Option<bool>> = vec![None; cnf.vars + 1];
    if search(&cnf.clauses, &mut assign) {
        Some(assign.into_iter().map(|v| v.unwrap_or(false)).collect())
    } else {
        None
    }
}

fn value(assign: &[Option<bool>], l: i64) -> Option<bool> {
    assign[l.unsigned_abs() as usize].map(|v| v == (l > 0))
}

fn search(clauses: &[Vec<i64>], assign: &mut Vec<Option<bool>>) -> bool {
    let mut trail = Vec::new();
    loop {
        let mut unit = None;
        let mut branch = None;
        for c in clauses {
            if c.iter().any(|&l| value(assign, l) == Some(true)) {
                continue;
            }
            let open: Vec<i64> = c
                .iter()
                .copied()
                .filter(|&l| value(assign, l).is_none())
                .collect();
            match open.len() {
                0 => {
                    for v in trail {
                        assign[v] = None;
                    }
                    return false;
                }
                1 => {
                    unit = Some(open[0]);
                    break;
                }
                _ => {
                    branch.get_or_insert(open[0]);
                }
            }
        }
        if let Some(l) = unit {
            let v = l.unsigned_abs() as usize;
            assign[v] = Some(l > 0);
            trail.push(v);
            continue;
        }
        let Some(l) = branch else {
            return true;
        };
        let v = l.unsigned_abs() as usize;
        for choice in [l > 0, l <= 0] {
            assign[v] = Some(choice);
            if search(clauses, assign) {
                return true;
            }
        }
        assign[v] = None;
        for v in trail {
            assign[v] = None;
        }
        return false;
    }
}
