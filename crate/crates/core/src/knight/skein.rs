//! Knight snake cycles of density 1/2 built from twines.

use crate::cell::{Board, Cell, CellPath, CellSet};
use crate::error::{invalid, Error, Result};
use crate::graph::{components, set_degree, trace_cycle, PieceGraph};
use crate::rules::MoveRule;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

const TIE: [(i32, i32); 4] = [(-2, 1), (-1, 1), (-1, 3), (0, 3)];
const SPLICE: [(i32, i32); 10] = [
    (-3, 4),
    (-3, 5),
    (-2, 2),
    (-2, 3),
    (-2, 6),
    (-1, 1),
    (-1, 2),
    (-1, 6),
    (0, 5),
    (0, 6),
];

fn offsets(corner: Cell, cells: &[(i32, i32)], side: Side) -> impl Iterator<Item = Cell> + '_ {
    let sign = if side == Side::Left { 1 } else { -1 };
    cells
        .iter()
        .map(move |&(x, y)| corner + Cell::new(sign * x, y))
}

/// The board of height two `[x_lo; x_hi] x [y_lo; y_lo + 1]`.
pub fn build_twine(x_lo: i32, x_hi: i32, y_lo: i32) -> Result<CellSet> {
    if x_hi < x_lo {
        return Err(invalid(format!("twine [{x_lo}; {x_hi}] is empty")));
    }
    Ok((x_lo..=x_hi)
        .flat_map(|x| [Cell::new(x, y_lo), Cell::new(x, y_lo + 1)])
        .collect())
}

/// Lower left and lower right corners of a twine.
fn twine_corners(t: &CellSet) -> Result<(Cell, Cell)> {
    let board = Board::bounding(t.as_btree()).ok_or_else(|| invalid("empty twine"))?;
    if board.height() != 2 || board.area() != t.len() {
        return Err(invalid(
            "not a twine: expected a full rectangle of height two",
        ));
    }
    let o = board.origin();
    Ok((o, o + Cell::new(board.width() as i32 - 1, 0)))
}

/// The twine plus the four cells that close it off on one side.
pub fn tie_off(twine: &CellSet, side: Side) -> Result<CellSet> {
    let (left, right) = twine_corners(twine)?;
    let a = if side == Side::Left { left } else { right };
    let mut out = twine.clone();
    out.extend(offsets(a, &TIE, side));
    Ok(out)
}

/// Two twines whose corners differ by `(1, 4)` (left) or `(-1, 4)`
/// (right), joined by ten cells.
pub fn splice(e: &CellSet, f: &CellSet, side: Side) -> Result<CellSet> {
    let (el, er) = twine_corners(e)?;
    let (fl, fr) = twine_corners(f)?;
    let (a, b, step) = match side {
        Side::Left => (el, fl, Cell::new(1, 4)),
        Side::Right => (er, fr, Cell::new(-1, 4)),
    };
    if a + step != b {
        return Err(invalid(format!(
            "corners {a} and {b} are not offset by {step}"
        )));
    }
    let mut out = e.union(f);
    out.extend(offsets(a, &SPLICE, side));
    Ok(out)
}

/// `U(k, I)`: `k` stacked twines over `I = [x_lo; x_hi]`, tied off at the
/// ends and spliced alternately on the right and left.
pub fn build_knight_u(k: u32, x_lo: i32, x_hi: i32) -> Result<CellSet> {
    let len = x_hi - x_lo + 1;
    if k == 0 || len < 8 * k as i32 - 5 {
        return Err(invalid(format!(
            "U({k}, I) needs |I| >= {}, got {len}",
            8 * k as i64 - 5
        )));
    }
    let k = k as i32;
    let corners: Vec<(Cell, Cell)> = (0..k)
        .map(|i| {
            let shift = if i % 2 == 0 { 0 } else { 3 };
            (
                Cell::new(x_lo + 4 * i + shift, 4 * i),
                Cell::new(x_hi - 4 * i + shift, 4 * i),
            )
        })
        .collect();
    let mut out = CellSet::new();
    for &(l, r) in &corners {
        out.extend(build_twine(l.x, r.x, l.y)?.iter());
    }
    out.extend(offsets(corners[0].0, &TIE, Side::Left));
    for i in 0..k as usize - 1 {
        if i % 2 == 0 {
            out.extend(offsets(corners[i].1, &SPLICE, Side::Right));
        } else {
            out.extend(offsets(corners[i].0, &SPLICE, Side::Left));
        }
    }
    let last = corners[k as usize - 1];
    if k % 2 == 0 {
        out.extend(offsets(last.0, &TIE, Side::Left));
    } else {
        out.extend(offsets(last.1, &TIE, Side::Right));
    }
    Ok(out)
}

/// `W` has at least `mn/2 - KNIGHT_CYCLE_SLACK * (m + n)` cells; measured
/// up to 78 x 200, where the hollow band along the middle costs about 7.5
/// cells per column.
pub const KNIGHT_CYCLE_SLACK: i64 = 8;

/// The set `W` on the board of height `m` and width `n`: four skeins along
/// the sides, stitched at three corners. Requires `m = 8k + 14` with
/// `k >= 3`, `n` even and `m <= n`.
///
/// The lower left stitch swaps `(4,4) + {(6,9), (9,6)}` for six cells. The
/// skeins end differently on the right, so the lower right stitch is found
/// by a connector search, and the upper left one is its image under the
/// half turn of the board.
pub fn build_knight_cycle(m: u32, n: u32) -> Result<CellSet> {
    if m < 38 || !(m - 14).is_multiple_of(8) || n % 2 == 1 || m > n {
        return Err(invalid(format!(
            "knight cycle needs m = 8k + 14 (k >= 3), n even, m <= n; got {m} x {n}"
        )));
    }
    let k = (m - 14) / 8;
    let (mi, ni) = (m as i32, n as i32);
    let board = Board::new(m, n)?;
    let u1 = build_knight_u(k, 8, ni - 12)?;
    let v1 = build_knight_u(k, 8, mi - 12)?.map(|c| Cell::new(c.y, c.x));
    let flip = |c: Cell| Cell::new(ni - 1 - c.x, mi - 1 - c.y);
    let v2 = v1.map(flip);
    let mut w = u1.union(&v1).union(&u1.map(flip)).union(&v2);
    let base = |(x, y): (i32, i32)| Cell::new(x + 4, y + 4);
    for d in [(6, 9), (9, 6)] {
        if !w.remove(base(d)) {
            return Err(Error::Verification(format!(
                "stitch cell {} is missing",
                base(d)
            )));
        }
    }
    w.extend([(3, 6), (4, 4), (6, 3), (7, 10), (9, 9), (10, 7)].map(base));
    let (del, add) = find_stitch(&board, &w, &u1, &v2, Cell::new(ni - 1, 0))
        .ok_or_else(|| Error::Verification("no stitch at the lower right corner".into()))?;
    for c in &del {
        w.remove(*c);
        w.remove(flip(*c));
    }
    for c in &add {
        w.insert(*c);
        w.insert(flip(*c));
    }
    Ok(w)
}

/// Cells to delete (one from each cycle) and connector cells to add so
/// that the knight cycles on `c1` and `c2` inside `w` merge into one.
fn find_stitch(
    board: &Board,
    w: &CellSet,
    c1: &CellSet,
    c2: &CellSet,
    corner: Cell,
) -> Option<(Vec<Cell>, Vec<Cell>)> {
    let near = |c: Cell| (c - corner).x.abs().max((c - corner).y.abs()) <= 24;
    let mut pairs: Vec<(i32, Cell, Cell)> = Vec::new();
    for a in c1.iter().filter(|&c| near(c) && w.contains(c)) {
        for b in c2.iter().filter(|&c| near(c) && w.contains(c)) {
            let d = b - a;
            if d.x.abs().max(d.y.abs()) <= 6 {
                pairs.push((d.x * d.x + d.y * d.y, a, b));
            }
        }
    }
    pairs.sort();
    let knight = MoveRule::Knight;
    let before = components(knight, w).len();
    let ends = |s: &CellSet, a: Cell| -> Vec<Cell> {
        knight
            .moves()
            .into_iter()
            .map(|v| a + v)
            .filter(|&c| s.contains(c))
            .collect()
    };
    for (_, a, b) in pairs {
        let mut cur = w.clone();
        cur.remove(a);
        cur.remove(b);
        let (ea, eb) = (ends(&cur, a), ends(&cur, b));
        if ea.len() != 2 || eb.len() != 2 {
            continue;
        }
        for (p, q) in [
            ((ea[0], eb[0]), (ea[1], eb[1])),
            ((ea[0], eb[1]), (ea[1], eb[0])),
        ] {
            let mut trial = cur.clone();
            let mut added = Vec::new();
            let ok =
                [p, q]
                    .into_iter()
                    .all(|(s, t)| match connector(board, &trial, s, t, corner) {
                        Some(path) => {
                            trial.extend(path.iter().copied());
                            added.extend(path);
                            true
                        }
                        None => false,
                    });
            if ok
                && components(knight, &trial).len() + 1 == before
                && added
                    .iter()
                    .chain(&ea)
                    .chain(&eb)
                    .all(|&c| set_degree(knight, &trial, c) == 2)
            {
                return Some((vec![a, b], added));
            }
        }
    }
    None
}

/// Shortest knight path from a neighbour of `s` to a neighbour of `t`
/// through cells that touch nothing in `set` except `s` and `t`.
fn connector(board: &Board, set: &CellSet, s: Cell, t: Cell, corner: Cell) -> Option<Vec<Cell>> {
    use std::collections::{BTreeMap, VecDeque};
    let knight = MoveRule::Knight;
    let free = |c: Cell| {
        board.contains(c)
            && (c - corner).x.abs().max((c - corner).y.abs()) <= 26
            && !set.contains(c)
            && knight.moves().into_iter().all(|v| {
                let d = c + v;
                !set.contains(d) || d == s || d == t
            })
    };
    let mut prev: BTreeMap<Cell, Option<Cell>> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for v in knight.moves() {
        let c = s + v;
        if free(c) && !prev.contains_key(&c) {
            prev.insert(c, None);
            queue.push_back(c);
        }
    }
    while let Some(c) = queue.pop_front() {
        if knight.adjacent(c, t) {
            let mut out = vec![c];
            let mut cur = c;
            while let Some(Some(p)) = prev.get(&cur) {
                out.push(*p);
                cur = *p;
            }
            out.reverse();
            return Some(out);
        }
        for v in knight.moves() {
            let d = c + v;
            if free(d) && !prev.contains_key(&d) {
                prev.insert(d, Some(c));
                queue.push_back(d);
            }
        }
    }
    None
}

/// `W` as a cycle, checked to be a knight snake cycle on the board.
pub fn knight_cycle_path(m: u32, n: u32) -> Result<CellPath> {
    let w = build_knight_cycle(m, n)?;
    let graph = PieceGraph::new(MoveRule::Knight, Board::new(m, n)?);
    let cycle = trace_cycle(MoveRule::Knight, &w)
        .ok_or_else(|| Error::Verification("knight graph on W is not a single cycle".into()))?;
    graph
        .check_snake_cycle(&cycle)
        .map_err(|v| Error::Verification(v.to_string()))?;
    Ok(cycle)
}
