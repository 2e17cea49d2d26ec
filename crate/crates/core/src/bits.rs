//! Bitmask view of a piece graph with at most 128 cells.

use crate::cell::{Cell, CellSet};
use crate::error::{Error, Result};
use crate::graph::PieceGraph;
use crate::symmetry::Symmetry;

pub type Mask = u128;

pub const MAX_CELLS: usize = 128;

#[inline]
pub fn bit(i: usize) -> Mask {
    1u128 << i
}

/// Iterates the set bit positions of a mask in increasing order.
pub fn ones(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

/// Cells indexed in row-major order (so index order is cell order) with
/// neighbourhood masks.
#[derive(Clone, Debug)]
pub struct IndexedGraph {
    pub graph: PieceGraph,
    pub cells: Vec<Cell>,
    pub adj: Vec<Mask>,
    pub all: Mask,
}

impl IndexedGraph {
    pub fn new(graph: PieceGraph) -> Result<Self> {
        let area = graph.board.area();
        if area > MAX_CELLS {
            return Err(Error::Limit(format!(
                "board has {area} cells, bitmask search supports at most {MAX_CELLS}"
            )));
        }
        let cells: Vec<Cell> = graph.board.cells().collect();
        let adj = cells
            .iter()
            .map(|&c| {
                graph
                    .neighbor_iter(c)
                    .map(|d| bit(graph.board.index_of(d).expect("on board")))
                    .fold(0, |a, b| a | b)
            })
            .collect();
        let all = if area == 128 { !0 } else { bit(area) - 1 };
        Ok(IndexedGraph {
            graph,
            cells,
            adj,
            all,
        })
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn index(&self, c: Cell) -> Option<usize> {
        self.graph.board.index_of(c)
    }

    pub fn mask_of(&self, s: &CellSet) -> Option<Mask> {
        s.iter()
            .map(|c| self.index(c).map(bit))
            .sum::<Option<Mask>>()
    }

    /// Closed neighbourhood union of all cells in `m`.
    pub fn neighbourhood(&self, m: Mask) -> Mask {
        ones(m).fold(0, |acc, i| acc | self.adj[i])
    }

    /// Cells reachable from `from` through `within` (excluding `from`
    /// unless it is reachable again).
    pub fn reach(&self, from: Mask, within: Mask) -> Mask {
        let mut seen = 0;
        let mut frontier = self.neighbourhood(from) & within;
        while frontier != 0 {
            seen |= frontier;
            frontier = self.neighbourhood(frontier) & within & !seen;
        }
        seen
    }

    /// Index permutation for each board symmetry.
    pub fn symmetry_tables(&self) -> Vec<Vec<usize>> {
        let b = self.graph.board;
        Symmetry::group(&b)
            .into_iter()
            .map(|g| {
                self.cells
                    .iter()
                    .map(|&c| b.index_of(g.apply(&b, c)).expect("on board"))
                    .collect()
            })
            .collect()
    }

    /// Smallest index in each cell's symmetry orbit.
    pub fn orbit_min(&self) -> Vec<usize> {
        let tables = self.symmetry_tables();
        (0..self.len())
            .map(|i| tables.iter().map(|t| t[i]).min().expect("identity"))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rules::MoveRule;

    #[test]
    fn masks_match_graph() {
        let g = PieceGraph::square(MoveRule::Knight, 5).unwrap();
        let ig = IndexedGraph::new(g).unwrap();
        for (i, &c) in ig.cells.iter().enumerate() {
            let n: Vec<Cell> = ones(ig.adj[i]).map(|j| ig.cells[j]).collect();
            let expected: Vec<Cell> = g.neighbors(c).unwrap().iter().collect();
            assert_eq!(n, expected);
        }
        assert_eq!(ig.all.count_ones(), 25);
    }

    #[test]
    fn too_large_board_is_rejected() {
        let g = PieceGraph::square(MoveRule::King, 12).unwrap();
        assert!(IndexedGraph::new(g).is_err());
        let g = PieceGraph::new(MoveRule::King, crate::Board::new(8, 16).unwrap());
        assert_eq!(IndexedGraph::new(g).unwrap().all, !0);
    }

    #[test]
    fn orbit_minimum_of_corner() {
        let ig = IndexedGraph::new(PieceGraph::square(MoveRule::King, 4).unwrap()).unwrap();
        let om = ig.orbit_min();
        assert_eq!(om[15], 0);
        assert_eq!(om[5], 5);
        assert_eq!(om[4], 1);
    }
}
