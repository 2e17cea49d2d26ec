//! Long wazir (grid) and fers snakes from the mod 3 pattern.

use std::collections::{BTreeMap, VecDeque};

use crate::cell::{Board, Cell, CellPath, CellSet};
use crate::error::{invalid, Error, Result};
use crate::graph::{components, trace_path, PieceGraph};
use crate::leaper::periodic::{halffree_fold, halffree_unfold};
use crate::rules::MoveRule;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SnakeMode {
    Path,
    Cycle,
}

/// Measured slack: the wazir snakes have at least
/// `2mn/3 - WAZIR_SLACK * (m + n)` cells, the fers snakes at least
/// `mn/3 - FERS_SLACK * (m + n)`.
pub const WAZIR_SLACK: f64 = 4.0;
pub const FERS_SLACK: f64 = 3.0;

/// Cells `(x, y)` of the `m x n` board with `x ≢ y (mod 3)`.
pub fn build_wazir_pseudosnake(m: u32, n: u32) -> Result<CellSet> {
    let board = Board::new(m, n)?;
    Ok(board
        .cells()
        .filter(|c| (c.x - c.y).rem_euclid(3) != 0)
        .collect())
}

/// Even cells of the board whose fold lies in the wazir pattern.
fn fers_pattern(board: &Board) -> CellSet {
    let even: CellSet = board
        .cells()
        .filter(|c| (c.x + c.y).rem_euclid(2) == 0)
        .collect();
    let folded = halffree_fold(&even, 0).expect("even cells");
    let kept: CellSet = folded
        .iter()
        .filter(|c| (c.x - c.y).rem_euclid(3) != 0)
        .collect();
    halffree_unfold(&kept, 0)
}

fn inset(m: u32, n: u32) -> Result<Board> {
    if m < 10 || n < 10 {
        return Err(invalid(format!(
            "stitched snakes need a board of at least 10 x 10, got {m} x {n}"
        )));
    }
    Board::with_origin(m - 8, n - 8, Cell::new(4, 4))
}

/// A snake in the grid graph of the `m x n` board built from the mod 3
/// pattern on the inset board `[4; n-5] x [4; m-5]`, its diagonal strips
/// joined through the margin.
pub fn stitch_wazir_snake(m: u32, n: u32, mode: SnakeMode) -> Result<CellPath> {
    let inner = inset(m, n)?;
    let board = Board::new(m, n)?;
    let pattern: CellSet = build_wazir_pseudosnake(m, n)?
        .iter()
        .filter(|&c| inner.contains(c))
        .collect();
    let graph = PieceGraph::new(MoveRule::Wazir, board);
    stitch(
        &graph,
        &inner,
        &pattern,
        |s| s.iter().map(|c| c.x - c.y).min().unwrap_or(0),
        mode,
    )
}

/// The fers analogue on one colour class: the wazir pattern folded onto
/// the even cells, with horizontal strips joined through the margin.
pub fn build_fers_snake(m: u32, n: u32, mode: SnakeMode) -> Result<CellPath> {
    if m < 12 || n < 12 {
        return Err(invalid(format!(
            "fers snakes need a board of at least 12 x 12, got {m} x {n}"
        )));
    }
    let inner = inset(m, n)?;
    let board = Board::new(m, n)?;
    let pattern: CellSet = fers_pattern(&board)
        .iter()
        .filter(|&c| inner.contains(c))
        .collect();
    let graph = PieceGraph::new(MoveRule::Fers, board);
    stitch(
        &graph,
        &inner,
        &pattern,
        |s| s.iter().map(|c| c.y).min().unwrap_or(0),
        mode,
    )
}

/// Joins the path components of `pattern` in the order given by `key`,
/// routing connectors outside `inner`. Strips that cannot be joined are
/// dropped.
fn stitch(
    graph: &PieceGraph,
    inner: &Board,
    pattern: &CellSet,
    key: impl Fn(&CellSet) -> i32,
    mode: SnakeMode,
) -> Result<CellPath> {
    let rule = graph.rule;
    let mut strips: Vec<CellSet> = components(rule, pattern);
    strips.sort_by_key(|s| (key(s), s.iter().next()));
    let strips: Vec<Vec<Cell>> = strips
        .iter()
        .map(|s| {
            trace_path(rule, s)
                .map(CellPath::into_cells)
                .ok_or_else(|| Error::Verification("pattern strip is not a path".into()))
        })
        .collect::<Result<_>>()?;
    let mut set: CellSet = pattern.clone();
    let mut route: Vec<Cell> = Vec::new();
    for strip in &strips {
        let Some(&exit) = route.last() else {
            route.extend(strip.iter().copied());
            continue;
        };
        let ends = [strip[0], *strip.last().expect("non-empty")];
        let best = ends
            .iter()
            .enumerate()
            .filter_map(|(i, &g)| connector(graph, inner, &set, exit, g).map(|c| (c.len(), i, c)))
            .min_by_key(|t| (t.0, t.1));
        match best {
            Some((_, i, conn)) => {
                set.extend(conn.iter().copied());
                route.extend(conn);
                if i == 0 {
                    route.extend(strip.iter().copied());
                } else {
                    route.extend(strip.iter().rev().copied());
                }
            }
            None => {
                for &c in strip {
                    set.remove(c);
                }
            }
        }
    }
    let path = match mode {
        SnakeMode::Path => CellPath::open(route),
        SnakeMode::Cycle => close(graph, inner, &mut set, route)?,
    };
    graph
        .check_snake(&path)
        .map_err(|v| Error::Verification(v.to_string()))?;
    Ok(path)
}

/// Closes `route` through the margin, dropping cells from its end until a
/// connector exists.
fn close(
    graph: &PieceGraph,
    inner: &Board,
    set: &mut CellSet,
    mut route: Vec<Cell>,
) -> Result<CellPath> {
    while route.len() >= 4 {
        let (s, t) = (route[0], *route.last().expect("non-empty"));
        if let Some(conn) = connector(graph, inner, set, t, s) {
            route.extend(conn);
            return Ok(CellPath::closed(route));
        }
        let dropped = route.pop().expect("non-empty");
        set.remove(dropped);
    }
    Err(Error::Verification("route cannot be closed".into()))
}

/// Shortest path between a neighbour of `s` and a neighbour of `t` through
/// board cells outside `inner` that touch nothing in `set` but `s` and `t`.
fn connector(
    graph: &PieceGraph,
    inner: &Board,
    set: &CellSet,
    s: Cell,
    t: Cell,
) -> Option<Vec<Cell>> {
    let free = |c: Cell| {
        graph.board.contains(c)
            && !inner.contains(c)
            && !set.contains(c)
            && graph
                .neighbor_iter(c)
                .all(|d| !set.contains(d) || d == s || d == t)
    };
    if graph.adjacent(s, t) {
        return None;
    }
    let mut prev: BTreeMap<Cell, Option<Cell>> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for c in graph.neighbor_iter(s) {
        if free(c) && !prev.contains_key(&c) {
            prev.insert(c, None);
            queue.push_back(c);
        }
    }
    while let Some(c) = queue.pop_front() {
        if graph.adjacent(c, t) {
            let mut out = vec![c];
            let mut cur = c;
            while let Some(Some(p)) = prev.get(&cur) {
                out.push(*p);
                cur = *p;
            }
            out.reverse();
            return Some(out);
        }
        for d in graph.neighbor_iter(c) {
            if free(d) && !prev.contains_key(&d) {
                prev.insert(d, Some(c));
                queue.push_back(d);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wazir_pattern_counts() {
        assert_eq!(build_wazir_pseudosnake(3, 3).unwrap().len(), 6);
        let s = build_wazir_pseudosnake(9, 9).unwrap();
        assert_eq!(s.len(), 54);
        assert!(PieceGraph::square(MoveRule::Wazir, 9)
            .unwrap()
            .is_pseudosnake(&s));
        for n in 1..20u32 {
            let row = build_wazir_pseudosnake(1, n).unwrap().len() as u32;
            assert_eq!(row, n - n.div_ceil(3));
        }
    }

    #[test]
    fn mod3_pattern_is_pseudosnake_up_to_12() {
        for m in 1..=12 {
            for n in 1..=12 {
                let g = PieceGraph::new(MoveRule::Wazir, Board::new(m, n).unwrap());
                assert!(g.is_pseudosnake(&build_wazir_pseudosnake(m, n).unwrap()));
            }
        }
    }

    #[test]
    fn wazir_snakes() {
        for m in [10u32, 12] {
            for n in 10..=30u32 {
                for mode in [SnakeMode::Path, SnakeMode::Cycle] {
                    let p = stitch_wazir_snake(m, n, mode).unwrap();
                    let target = 2.0 * (m * n) as f64 / 3.0 - WAZIR_SLACK * (m + n) as f64;
                    assert!(
                        p.cells().len() as f64 >= target,
                        "{m}x{n} {mode:?}: {}",
                        p.cells().len()
                    );
                }
            }
        }
        assert!(stitch_wazir_snake(9, 12, SnakeMode::Path).is_err());
    }

    #[test]
    fn fers_snakes() {
        for m in [12u32, 13, 15] {
            for n in [12u32, 14, 17, 24] {
                for mode in [SnakeMode::Path, SnakeMode::Cycle] {
                    let p = build_fers_snake(m, n, mode).unwrap();
                    assert!(p.cells().iter().all(|c| (c.x + c.y) % 2 == 0));
                    let target = (m * n) as f64 / 3.0 - FERS_SLACK * (m + n) as f64;
                    assert!(
                        p.cells().len() as f64 >= target,
                        "{m}x{n} {mode:?}: {}",
                        p.cells().len()
                    );
                }
            }
        }
    }

    #[test]
    fn slack_holds_on_a_sweep() {
        for m in (10..=30u32).step_by(2) {
            for n in (m..=40u32).step_by(3) {
                for mode in [SnakeMode::Path, SnakeMode::Cycle] {
                    let l = stitch_wazir_snake(m, n, mode).unwrap().len() as f64;
                    assert!(l >= 2.0 * (m * n) as f64 / 3.0 - WAZIR_SLACK * (m + n) as f64);
                    if m >= 12 {
                        let l = build_fers_snake(m, n, mode).unwrap().len() as f64;
                        assert!(l >= (m * n) as f64 / 3.0 - FERS_SLACK * (m + n) as f64);
                    }
                }
            }
        }
    }
}
