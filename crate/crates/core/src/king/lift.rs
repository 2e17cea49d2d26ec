//! Lifting grid paths on the `k x k` board to king snakes on the
//! `(2k - 1) x (2k - 1)` board, and the inverse clean-up.

use std::collections::BTreeSet;

use crate::cell::{Cell, CellPath};
use crate::error::{invalid, Result};
use crate::graph::PieceGraph;
use crate::king::gridpath::{find_free_cycles, FreeCycleSpec, GridPath, Pass};

/// A set of free cycles to aberrate, at most one per path edge.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LiftSelection {
    chosen: Vec<FreeCycleSpec>,
}

impl LiftSelection {
    pub fn none() -> Self {
        LiftSelection::default()
    }

    pub fn new(mut chosen: Vec<FreeCycleSpec>) -> Result<Self> {
        chosen.sort();
        chosen.dedup();
        let edges: BTreeSet<(Cell, Cell)> = chosen.iter().map(|f| (f.a1, f.a2)).collect();
        if edges.len() != chosen.len() {
            return Err(invalid("two selected free cycles share a path edge"));
        }
        Ok(LiftSelection { chosen })
    }

    pub fn chosen(&self) -> &[FreeCycleSpec] {
        &self.chosen
    }
}

/// Each grid edge `a1 a2` becomes `2a1 - (a1 + a2) - 2a2`.
pub fn phi(gp: &GridPath) -> CellPath {
    let c = gp.cells();
    let mut out = Vec::with_capacity(2 * c.len());
    for (i, &a) in c.iter().enumerate() {
        out.push(2 * a);
        if let Some(&b) = c.get(i + 1) {
            out.push(a + b);
        }
    }
    if gp.is_closed() && c.len() > 1 {
        out.push(c[c.len() - 1] + c[0]);
    }
    CellPath::from_parts(out, gp.is_closed())
}

/// [`phi`] with the corner cell `2b` cut from every turn `a1 b a2`.
pub fn psi(gp: &GridPath) -> CellPath {
    let passes = gp.passes();
    let full = phi(gp);
    let cells: Vec<Cell> = full
        .cells()
        .iter()
        .copied()
        .filter(|&x| match x.halved() {
            Some(h) => {
                let i = gp.cells().iter().position(|&c| c == h).expect("path cell");
                passes[i] != Pass::Turn
            }
            None => true,
        })
        .collect();
    CellPath::from_parts(cells, gp.is_closed())
}

/// [`psi`] with the midpoint of each selected free cycle's edge moved to
/// the cycle's centre.
pub fn lift(gp: &GridPath, sel: &LiftSelection) -> Result<CellPath> {
    let free: BTreeSet<FreeCycleSpec> = find_free_cycles(gp).into_iter().collect();
    let mut cells = psi(gp).into_cells();
    for f in sel.chosen() {
        if !free.contains(f) {
            return Err(invalid(format!("{f:?} is not a free cycle of the path")));
        }
        let mid = f.a1 + f.a2;
        let slot = cells
            .iter()
            .position(|&c| c == mid)
            .expect("midpoint of a path edge survives smoothing");
        cells[slot] = f.center2();
    }
    Ok(CellPath::from_parts(cells, gp.is_closed()))
}

/// All `2^f` lifts of `gp`, in selection-mask order.
pub fn all_lifts(gp: &GridPath) -> Vec<CellPath> {
    let free = find_free_cycles(gp);
    (0u64..1 << free.len())
        .map(|mask| {
            let chosen = (0..free.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| free[i])
                .collect();
            let sel = LiftSelection::new(chosen).expect("free cycles never share an edge");
            lift(gp, &sel).expect("selection of free cycles")
        })
        .collect()
}

/// Repeatedly replaces rectifiable aberrations `b1 a1 b a2 b2` by
/// `b1 a1 c a2 b2`. Returns the result and the number of replacements.
pub fn rectify_all(graph: &PieceGraph, p: &CellPath) -> (CellPath, usize) {
    let origin = graph.board.origin();
    let even = |c: Cell| (c - origin).is_even();
    let mut cells = p.cells().to_vec();
    let n = cells.len();
    let closed = p.is_closed();
    let mut count = 0;
    loop {
        let windows = if closed { n } else { n.saturating_sub(4) };
        let mut changed = false;
        for s in 0..windows {
            let at = |d: usize| cells[(s + d) % n];
            let (b1, a1, b, a2, b2) = (at(0), at(1), at(2), at(3), at(4));
            let gap = a2 - a1;
            let straight = (gap.x == 0 && gap.y.abs() == 2) || (gap.y == 0 && gap.x.abs() == 2);
            if !(even(a1) && even(a2) && straight) {
                continue;
            }
            let c = Cell::new((a1.x + a2.x) / 2, (a1.y + a2.y) / 2);
            if b == c
                || !graph.board.contains(c)
                || !graph.adjacent(c, a1)
                || !graph.adjacent(c, a2)
                || b1 != 2 * a1 - c
                || b2 != 2 * a2 - c
            {
                continue;
            }
            cells[(s + 2) % n] = c;
            count += 1;
            changed = true;
        }
        if !changed {
            return (CellPath::from_parts(cells, closed), count);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::king::gridpath::stamp_to_ham_path;
    use crate::king::stamp::{enumerate_stamp_foldings, StampFolding};
    use crate::rules::MoveRule;

    fn king_odd(k: u32) -> PieceGraph {
        PieceGraph::square(MoveRule::King, 2 * k - 1).unwrap()
    }

    #[test]
    fn single_edge() {
        let gp = GridPath::new(2, CellPath::open(vec![Cell::new(0, 0), Cell::new(1, 0)])).unwrap();
        assert_eq!(phi(&gp).len(), 2);
        assert_eq!(psi(&gp), phi(&gp));
    }

    #[test]
    fn lengths_of_phi_and_psi() {
        for sf in enumerate_stamp_foldings(4).unwrap() {
            let gp = stamp_to_ham_path(&sf, false).unwrap();
            assert_eq!(phi(&gp).len(), 30);
            assert_eq!(psi(&gp).len(), 30 - 6);
            assert_eq!(psi(&gp).len(), (7 * 7 - 1) / 2);
        }
    }

    #[test]
    fn every_lift_is_a_longest_snake() {
        for k in 1..=6u32 {
            let g = king_odd(k);
            for sf in enumerate_stamp_foldings(k as usize).unwrap() {
                for refl in [false, true] {
                    let gp = stamp_to_ham_path(&sf, refl).unwrap();
                    let lifts = all_lifts(&gp);
                    let f = find_free_cycles(&gp).len();
                    assert_eq!(lifts.len(), 1 << f);
                    let distinct: BTreeSet<Vec<Cell>> =
                        lifts.iter().map(|p| p.cells().to_vec()).collect();
                    assert_eq!(distinct.len(), lifts.len());
                    for p in &lifts {
                        assert_eq!(g.check_snake_path(p), Ok(()));
                        assert_eq!(p.len() as u32, (g.board.area() as u32 - 1) / 2);
                    }
                }
            }
        }
    }

    #[test]
    fn rectify_undoes_lift() {
        for k in [7usize, 8] {
            let sf = StampFolding::rotated_tail(k).unwrap();
            let gp = stamp_to_ham_path(&sf, false).unwrap();
            let g = king_odd(k as u32);
            let base = psi(&gp);
            assert_eq!(rectify_all(&g, &base), (base.clone(), 0));
            for p in all_lifts(&gp) {
                let aberrations = p.cells().iter().filter(|c| c.is_odd()).count();
                let (q, n) = rectify_all(&g, &p);
                assert_eq!(q, base);
                assert_eq!(n, aberrations);
            }
        }
    }

    #[test]
    fn rectify_pattern() {
        let g = PieceGraph::square(MoveRule::King, 7).unwrap();
        let c = Cell::new;
        let p = CellPath::open(vec![c(1, 2), c(2, 2), c(3, 1), c(4, 2), c(5, 2)]);
        let (q, n) = rectify_all(&g, &p);
        assert_eq!(n, 1);
        assert_eq!(q.cells()[2], c(3, 2));
        assert!(g.is_snake_path(&q));
    }

    #[test]
    fn non_free_selection_rejected() {
        let gp = stamp_to_ham_path(&StampFolding::identity(3), false).unwrap();
        let fake = FreeCycleSpec {
            a1: Cell::new(0, 0),
            a2: Cell::new(0, 1),
            b1: Cell::new(1, 1),
            b2: Cell::new(1, 0),
        };
        assert!(lift(&gp, &LiftSelection::new(vec![fake]).unwrap()).is_err());
    }
}
