//! Long king snake cycles and the crystallised sets `D_n`.

use std::collections::BTreeMap;

use crate::cell::{Board, Cell, CellPath, CellSet};
use crate::error::{invalid, Error, Result};
use crate::graph::PieceGraph;
use crate::graph::{set_degree, trace_cycle};
use crate::rules::MoveRule;
use crate::symmetry::symmetric_closure;

/// The double-spiral Hamiltonian path of the `k x k` grid (`k` even) whose
/// frames all omit the two edges above their lower-left corner; its ends
/// are `(0, 0)` and `(0, 1)`.
pub fn type_ii0_path(k: u32) -> Result<CellPath> {
    if k == 0 || k % 2 == 1 {
        return Err(invalid(format!(
            "type II(0) path needs an even side, got {k}"
        )));
    }
    let k = k as i32;
    let c = Cell::new;
    let mut edges: Vec<(Cell, Cell)> = Vec::new();
    let mut chain = |cells: &[Cell]| {
        for w in cells.windows(2) {
            edges.push((w[0], w[1]));
        }
    };
    for i in 0..k / 2 - 1 {
        let hi = k - i - 1;
        let mut run = Vec::new();
        run.extend((i..=hi).map(|x| c(x, i)));
        run.extend((i + 1..=hi).map(|y| c(hi, y)));
        run.extend((i..hi).rev().map(|x| c(x, hi)));
        run.extend((i + 2..hi).rev().map(|y| c(i, y)));
        chain(&run);
        chain(&[c(i, i + 1), c(i + 1, i + 1)]);
        chain(&[c(i, i + 2), c(i + 1, i + 2)]);
    }
    let a = k / 2 - 1;
    chain(&[c(a, a), c(a + 1, a), c(a + 1, a + 1), c(a, a + 1)]);
    walk_edges(&edges, c(0, 0)).ok_or_else(|| invalid("frame edges do not form a path"))
}

/// Orders an edge list forming one path, starting at `start`.
fn walk_edges(edges: &[(Cell, Cell)], start: Cell) -> Option<CellPath> {
    let mut adj: BTreeMap<Cell, Vec<Cell>> = BTreeMap::new();
    for &(a, b) in edges {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    if adj.values().any(|v| v.len() > 2) || adj.get(&start)?.len() != 1 {
        return None;
    }
    let mut out = vec![start];
    let mut prev: Option<Cell> = None;
    let mut cur = start;
    while let Some(&next) = adj[&cur].iter().find(|&&n| Some(n) != prev) {
        out.push(next);
        prev = Some(cur);
        cur = next;
        if out.len() > adj.len() {
            return None;
        }
    }
    (out.len() == adj.len()).then(|| CellPath::open(out))
}

/// A snake cycle of length `n²/2 - 1` in the king graph on the `n x n`
/// board, `n ≡ 0 (mod 4)`, `n >= 8`.
///
/// This is the blow-up of the closed type II(0) grid cycle on the
/// `n/2 x n/2` board: frame `i` becomes the cornerless ring at offset `2i`,
/// consecutive rings are joined next to the frame corner `(i, i)` exactly as
/// in `D_n`, and the innermost 2x2 frame is filled in by a short search.
pub fn build_king_0mod4_cycle(n: u32) -> Result<CellPath> {
    if !n.is_multiple_of(4) || n < 8 {
        return Err(invalid(format!(
            "0 mod 4 cycle needs n ≡ 0 (mod 4), n >= 8, got {n}"
        )));
    }
    let graph = PieceGraph::square(MoveRule::King, n)?;
    let rings = build_d_n(n, 8)?;
    let q = (n / 2 - 2) as i32;
    let centre: Vec<Cell> = (q..q + 4)
        .flat_map(|y| (q..q + 4).map(move |x| Cell::new(x, y)))
        .collect();
    let want = (n * n / 2 - 1) as usize;
    let cycle = complete_cycle(&graph, &rings, &centre, want - rings.len())
        .ok_or_else(|| Error::Verification("centre of the ring cycle cannot be filled".into()))?;
    graph
        .check_snake_cycle(&cycle)
        .map_err(|v| Error::Verification(v.to_string()))?;
    if cycle.len() != want {
        return Err(Error::Verification(format!(
            "cycle has length {}",
            cycle.len()
        )));
    }
    Ok(cycle.normalized())
}

/// Adds `extra` cells from `region` to the snake path `base` so that the
/// union is a snake cycle.
fn complete_cycle(
    graph: &PieceGraph,
    base: &CellSet,
    region: &[Cell],
    extra: usize,
) -> Option<CellPath> {
    fn go(
        graph: &PieceGraph,
        set: &mut CellSet,
        region: &[Cell],
        from: usize,
        left: usize,
    ) -> Option<CellPath> {
        if left == 0 {
            return trace_cycle(graph.rule, set).filter(|c| graph.is_snake_cycle(c));
        }
        for i in from..region.len() {
            let c = region[i];
            if set.contains(c) || set_degree(graph.rule, set, c) > 2 {
                continue;
            }
            set.insert(c);
            if graph
                .neighbor_iter(c)
                .all(|d| !set.contains(d) || set_degree(graph.rule, set, d) <= 2)
            {
                if let Some(p) = go(graph, set, region, i + 1, left - 1) {
                    return Some(p);
                }
            }
            set.remove(c);
        }
        None
    }
    let mut set = base.clone();
    go(graph, &mut set, region, 0, extra)
}

/// The set `D_n` on the `n x n` board for a base size `n_star >= 7` with
/// `n ≡ n_star (mod 4)`, `n >= n_star`.
pub fn build_d_n(n: u32, n_star: u32) -> Result<CellSet> {
    if n_star < 7 || n < n_star || !(n - n_star).is_multiple_of(4) {
        return Err(invalid(format!(
            "D_n needs n_star >= 7, n >= n_star, n ≡ n_star (mod 4); got n={n}, n_star={n_star}"
        )));
    }
    let board = Board::square(n)?;
    let (n, reach) = (n as i32, ((n - n_star) / 2) as i32);
    let mut base = CellSet::new();
    for y in (0..=reach).step_by(2) {
        for x in 0..n {
            if x - y >= 1 && x + y <= n - 2 {
                base.insert(Cell::new(x, y));
            }
        }
    }
    let mut d = symmetric_closure(&board, &base);
    let c = Cell::new;
    for x in [c(0, 2), c(0, 3), c(0, 4)] {
        d.remove(x);
    }
    d.extend([c(1, 2), c(1, 4)]);
    for i in (2..=reach).step_by(2) {
        let a = c(i, i);
        for off in [c(0, 1), c(0, 3), c(0, 4)] {
            d.remove(a + off);
        }
        d.extend([a, a + c(1, 2), a + c(1, 4)]);
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::trace_path;
    use crate::king::gridpath::GridPath;

    #[test]
    fn type_ii0_is_hamiltonian() {
        for k in (2..=12).step_by(2) {
            let p = type_ii0_path(k).unwrap();
            assert_eq!(p.cells().len() as u32, k * k);
            assert_eq!(p.cells()[0], Cell::new(0, 0));
            assert_eq!(*p.cells().last().unwrap(), Cell::new(0, 1));
            assert!(GridPath::new(k, p).is_ok());
        }
    }

    #[test]
    fn cycles_for_small_n() {
        for n in [8u32, 12, 16, 24, 40] {
            let c = build_king_0mod4_cycle(n).unwrap();
            assert_eq!(c.len() as u32, n * n / 2 - 1);
        }
        assert!(build_king_0mod4_cycle(10).is_err());
        assert!(build_king_0mod4_cycle(4).is_err());
    }

    #[test]
    fn cycle_follows_the_type_ii0_grid_cycle() {
        for n in [8u32, 12, 16, 20] {
            let c = build_king_0mod4_cycle(n).unwrap();
            let mut blocks: Vec<Cell> = Vec::new();
            let mut sizes: BTreeMap<Cell, usize> = BTreeMap::new();
            for &x in c.cells() {
                let b = Cell::new(x.x / 2, x.y / 2);
                *sizes.entry(b).or_default() += 1;
                if blocks.last() != Some(&b) {
                    blocks.push(b);
                }
            }
            if blocks.len() > 1 && blocks[0] == *blocks.last().unwrap() {
                blocks.pop();
            }
            let k = n / 2;
            assert_eq!(blocks.len() as u32, k * k, "each block visited once, n={n}");
            assert_eq!(sizes.values().filter(|&&m| m == 1).count(), 1);
            assert!(sizes.values().all(|&m| m == 1 || m == 2));
            let grid = CellPath::closed(blocks);
            let rho = type_ii0_path(k).unwrap();
            let rho = CellPath::closed(rho.into_cells());
            assert_eq!(grid.normalized(), rho.normalized(), "n={n}");
        }
    }

    #[test]
    fn d_n_is_a_snake_path() {
        for n_star in 7..=10u32 {
            for n in [n_star, n_star + 4, n_star + 8, n_star + 12] {
                let d = build_d_n(n, n_star).unwrap();
                let p = trace_path(MoveRule::King, &d).expect("single path");
                let g = PieceGraph::square(MoveRule::King, n).unwrap();
                assert_eq!(g.check_snake_path(&p), Ok(()), "n={n} n*={n_star}");
                assert!(g.is_pseudosnake(&d));
            }
        }
        assert!(build_d_n(9, 7).is_err());
        assert!(build_d_n(7, 6).is_err());
    }

    #[test]
    fn d_n_base_pattern_is_the_outer_ring() {
        let d = build_d_n(7, 7).unwrap();
        assert!(d
            .iter()
            .all(|c| c.x == 0 || c.y == 0 || c.x == 6 || c.y == 6 || c.x == 1));
        assert_eq!(d.len(), 4 * 5 - 3 + 2);
    }
}
