//! Block decomposition of the odd king board and the resulting bound on
//! snake path length.

use std::collections::{BTreeMap, BTreeSet};

use crate::cell::{Board, Cell, CellPath, CellSet};
use crate::error::{invalid, Error, Result};
use crate::rules::MoveRule;
use crate::symmetry::Symmetry;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BlockKind {
    Little,
    Large,
}

/// A subgraph of the king graph: cells plus a set of regular edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Block {
    pub kind: BlockKind,
    pub cells: CellSet,
    /// Each edge with its smaller endpoint first.
    pub edges: BTreeSet<(Cell, Cell)>,
}

impl Block {
    pub fn capacity(&self) -> usize {
        match self.kind {
            BlockKind::Little => 1,
            BlockKind::Large => 2,
        }
    }

    fn transformed(&self, board: &Board, g: Symmetry) -> Block {
        Block {
            kind: self.kind,
            cells: g.apply_set(board, &self.cells),
            edges: self
                .edges
                .iter()
                .map(|&(a, b)| edge(g.apply(board, a), g.apply(board, b)))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub n: u32,
    pub blocks: Vec<Block>,
}

fn edge(a: Cell, b: Cell) -> (Cell, Cell) {
    (a.min(b), a.max(b))
}

/// Both coordinates odd.
pub fn is_odd_cell(c: Cell) -> bool {
    c.x % 2 != 0 && c.y % 2 != 0
}

/// Not incident with an odd cell.
pub fn is_regular_edge(a: Cell, b: Cell) -> bool {
    !is_odd_cell(a) && !is_odd_cell(b)
}

fn little(a: Cell) -> Block {
    let (u, r) = (a + Cell::new(0, 1), a + Cell::new(1, 0));
    Block {
        kind: BlockKind::Little,
        cells: (0..2)
            .flat_map(|y| (0..2).map(move |x| a + Cell::new(x, y)))
            .collect(),
        edges: [edge(a, u), edge(a, r), edge(u, r)].into_iter().collect(),
    }
}

fn large(a: Cell) -> Block {
    let up = a + Cell::new(0, 1);
    let mut edges: BTreeSet<_> = [edge(a, a + Cell::new(-1, 0)), edge(a, a + Cell::new(1, 0))]
        .into_iter()
        .collect();
    for dy in [0, 2] {
        for dx in -1..=1 {
            edges.insert(edge(up, a + Cell::new(dx, dy)));
        }
    }
    Block {
        kind: BlockKind::Large,
        cells: (0..3)
            .flat_map(|y| (-1..2).map(move |x| a + Cell::new(x, y)))
            .collect(),
        edges,
    }
}

/// Little blocks at even diagonal cells `(z, z)` with `z <= k - 2`, large
/// blocks at even `(x, y)` with `x > y` and `x + y <= n - 3`, and all their
/// images under the board symmetries, where `n = 2k - 1`.
pub fn build_odd_blocks(n: u32) -> Result<BlockDecomposition> {
    if n.is_multiple_of(2) || n < 5 {
        return Err(invalid(format!(
            "block decomposition needs odd n >= 5, got {n}"
        )));
    }
    let board = Board::square(n)?;
    let k = (n as i32 + 1) / 2;
    let n = n as i32;
    let mut base = Vec::new();
    for z in (0..=k - 2).step_by(2) {
        base.push(little(Cell::new(z, z)));
    }
    for y in (0..n).step_by(2) {
        for x in (y + 1..n).filter(|x| x % 2 == 0) {
            if x + y <= n - 3 {
                base.push(large(Cell::new(x, y)));
            }
        }
    }
    let blocks: BTreeSet<Block> = base
        .iter()
        .flat_map(|b| {
            Symmetry::group(&board)
                .into_iter()
                .map(|g| b.transformed(&board, g))
        })
        .collect();
    Ok(BlockDecomposition {
        n: n as u32,
        blocks: blocks.into_iter().collect(),
    })
}

impl BlockDecomposition {
    pub fn total_capacity(&self) -> usize {
        self.blocks.iter().map(Block::capacity).sum()
    }

    /// Every odd cell lies in at least two blocks and every regular king
    /// edge in at least one.
    pub fn check_coverage(&self) -> Result<()> {
        let board = Board::square(self.n)?;
        let mut cell_count: BTreeMap<Cell, usize> = BTreeMap::new();
        let mut edge_count: BTreeMap<(Cell, Cell), usize> = BTreeMap::new();
        for b in &self.blocks {
            if b.cells.iter().any(|c| !board.contains(c)) {
                return Err(Error::Verification(format!(
                    "block {:?} leaves the board",
                    b.cells
                )));
            }
            if b.edges.iter().any(|&(a, c)| {
                !is_regular_edge(a, c) || !b.cells.contains(a) || !b.cells.contains(c)
            }) {
                return Err(Error::Verification(
                    "block edge is irregular or outside its block".into(),
                ));
            }
            for c in b.cells.iter() {
                *cell_count.entry(c).or_default() += 1;
            }
            for &e in &b.edges {
                *edge_count.entry(e).or_default() += 1;
            }
        }
        for c in board.cells() {
            if is_odd_cell(c) && cell_count.get(&c).copied().unwrap_or(0) < 2 {
                return Err(Error::Verification(format!(
                    "odd cell {c} is in fewer than two blocks"
                )));
            }
            for d in MoveRule::King.moves() {
                let e = c + d;
                if c < e
                    && board.contains(e)
                    && is_regular_edge(c, e)
                    && !edge_count.contains_key(&edge(c, e))
                {
                    return Err(Error::Verification(format!(
                        "regular edge {c}-{e} is in no block"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// `(w_cell, w_edge, w)`: odd cells of `p` in `b`, edges of `p` among the
/// block's edges, and their sum.
pub fn block_weight(b: &Block, p: &CellPath) -> (usize, usize, usize) {
    let wc = p
        .cells()
        .iter()
        .filter(|&&c| is_odd_cell(c) && b.cells.contains(c))
        .count();
    let we = p
        .edges()
        .filter(|&(a, c)| b.edges.contains(&edge(a, c)))
        .count();
    (wc, we, wc + we)
}

/// Total block capacity after checking both coverage conditions. Equals
/// `(n² - 1) / 2`.
pub fn odd_upper_bound_certificate(n: u32) -> Result<usize> {
    let d = build_odd_blocks(n)?;
    d.check_coverage()?;
    let total = d.total_capacity();
    let expected = ((n * n - 1) / 2) as usize;
    if total != expected {
        return Err(Error::Verification(format!(
            "capacity {total}, expected {expected}"
        )));
    }
    Ok(total)
}

/// The chain `len(p) <= 2 w_cell(p) + w_edge(p) <= Σ w(B) <= Σ capacity`,
/// with every block within its capacity.
pub fn path_weight_bound(n: u32, p: &CellPath) -> Result<bool> {
    let d = build_odd_blocks(n)?;
    let wc = p.cells().iter().filter(|&&c| is_odd_cell(c)).count();
    let we = p.edges().filter(|&(a, c)| is_regular_edge(a, c)).count();
    let mut sum = 0;
    for b in &d.blocks {
        let (_, _, w) = block_weight(b, p);
        if w > b.capacity() {
            return Ok(false);
        }
        sum += w;
    }
    Ok(p.len() <= 2 * wc + we && 2 * wc + we <= sum && sum <= d.total_capacity())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::PieceGraph;
    use crate::king::build_odd_king_comb;
    use crate::search::{longest_snake, Mode, Objective, SearchOptions};

    #[test]
    fn n5_blocks() {
        let d = build_odd_blocks(5).unwrap();
        let little = d
            .blocks
            .iter()
            .filter(|b| b.kind == BlockKind::Little)
            .count();
        assert_eq!((little, d.blocks.len() - little), (4, 4));
        assert_eq!(d.total_capacity(), 12);
        for b in &d.blocks {
            let odd = b.cells.iter().filter(|&c| is_odd_cell(c)).count();
            match b.kind {
                BlockKind::Little => assert_eq!((b.cells.len(), b.edges.len(), odd), (4, 3, 1)),
                BlockKind::Large => assert_eq!((b.cells.len(), b.edges.len(), odd), (9, 8, 2)),
            }
        }
    }

    #[test]
    fn certificates() {
        for n in (5..=41).step_by(2) {
            assert_eq!(
                odd_upper_bound_certificate(n).unwrap(),
                ((n * n - 1) / 2) as usize
            );
        }
        assert_eq!(odd_upper_bound_certificate(9).unwrap(), 40);
        assert_eq!(odd_upper_bound_certificate(41).unwrap(), 840);
        assert!(build_odd_blocks(6).is_err());
        assert!(build_odd_blocks(3).is_err());
    }

    #[test]
    fn n11_layout() {
        let d = build_odd_blocks(11).unwrap();
        let little = d
            .blocks
            .iter()
            .filter(|b| b.kind == BlockKind::Little)
            .count();
        // Little blocks at (0,0), (2,2) and (4,4) and their images.
        assert_eq!(little, 12);
        assert_eq!(d.total_capacity(), 60);
    }

    #[test]
    fn comb_attains_every_capacity() {
        let p = build_odd_king_comb(9).unwrap();
        let d = build_odd_blocks(9).unwrap();
        for b in &d.blocks {
            assert_eq!(block_weight(b, &p).2, b.capacity());
        }
        assert!(path_weight_bound(9, &p).unwrap());
        assert_eq!(p.len(), 40);
    }

    #[test]
    fn trivial_paths() {
        let d = build_odd_blocks(5).unwrap();
        let empty = CellPath::open(vec![]);
        assert_eq!(block_weight(&d.blocks[0], &empty), (0, 0, 0));
        assert!(path_weight_bound(5, &CellPath::open(vec![Cell::new(1, 1)])).unwrap());
    }

    #[test]
    fn weight_chain_holds_on_every_5x5_snake_path() {
        let g = PieceGraph::square(MoveRule::King, 5).unwrap();
        let d = build_odd_blocks(5).unwrap();
        let mut total = 0;
        for len in 0..=12 {
            let opts = SearchOptions::new(Mode::Path, Objective::EnumerateLength(len))
                .with_symmetry(false);
            let r = longest_snake(&g, &opts).unwrap();
            for p in &r.solutions {
                for b in &d.blocks {
                    assert!(block_weight(b, p).2 <= b.capacity());
                }
                assert!(path_weight_bound(5, p).unwrap());
            }
            total += r.solutions.len();
        }
        assert!(total > 25);
    }
}
