//! Length bounds from weighted graphs of known pseudosnake density.

use num_rational::Ratio;

use crate::cell::{Board, CellSet};
use crate::certify::solver::max_weight_pseudosnake;
use crate::error::{Error, Result};
use crate::knight::WeightedCellSet;
use crate::rules::MoveRule;

/// Upper bound on the size of any pseudosnake of the `m x n` board when
/// `gamma` has pseudosnake density `tau`.
///
/// With `w x h` the bounding box of `gamma`, there are
/// `N = (m - h + 1)(n - w + 1)` translates of it on the board (0 if either
/// factor is negative) and each holds at most `tau * w(gamma)` weight of the
/// pseudosnake. A cell at least `w - 1` columns and `h - 1` rows from every
/// edge collects weight `w(gamma)` over the translates, so there are at most
/// `floor(tau N)` such cells in the pseudosnake. The other
/// `mn - (n - 2w + 2)(m - 2h + 2)` cells are counted in full:
///
/// `bound = min(mn, floor(tau N) + mn - (n - 2w + 2)⁺ (m - 2h + 2)⁺)`,
///
/// which is at most `ceil(tau mn) + (2w - 2) m + (2h - 2) n`.
pub fn capacity_upper_bound(gamma: &WeightedCellSet, tau: Ratio<u64>, m: u32, n: u32) -> u64 {
    let area = m as u64 * n as u64;
    let Some(bb) = Board::bounding(gamma.cells().as_btree()) else {
        return area;
    };
    let (w, h) = (bb.width() as i64, bb.height() as i64);
    let (m, n) = (m as i64, n as i64);
    let pos = |v: i64| v.max(0) as u64;
    let copies = pos(m - h + 1) * pos(n - w + 1);
    let interior = pos(n - 2 * w + 2) * pos(m - 2 * h + 2);
    let inner = (tau * Ratio::from_integer(copies)).to_integer();
    area.min(inner + area - interior)
}

/// Largest unit-weight pseudosnake of the `n x n` board over its area.
pub fn tau_n(rule: MoveRule, n: u32, budget: u64) -> Result<Ratio<u64>> {
    let cells: CellSet = Board::square(n)?.cells().collect();
    let r = max_weight_pseudosnake(&WeightedCellSet::uniform(&cells), rule, budget)?;
    if !r.proven_optimal {
        return Err(Error::Limit(format!(
            "node budget of {budget} ran out on the {n} x {n} board"
        )));
    }
    Ok(Ratio::new(r.optimum, (n * n) as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::brute_force_max_weight;
    use crate::knight::{build_pancake, build_tesseract_set};

    #[test]
    fn pancake_bounds() {
        let g = build_pancake();
        let half = Ratio::new(1, 2);
        assert!(capacity_upper_bound(&g, half, 8, 8) >= 34);
        assert!(capacity_upper_bound(&g, half, 1, 1) >= 1);
        for s in [50u32, 100, 400] {
            let b = capacity_upper_bound(&g, half, s, s) as f64;
            let area = (s * s) as f64;
            assert!(b < area);
            assert!(b <= area / 2.0 + 40.0 * s as f64);
        }
        assert_eq!(
            capacity_upper_bound(&WeightedCellSet::new(), half, 3, 4),
            12
        );
    }

    #[test]
    fn knight_tau_small() {
        assert_eq!(
            tau_n(MoveRule::Knight, 1, 100).unwrap(),
            Ratio::from_integer(1)
        );
        assert_eq!(
            tau_n(MoveRule::King, 1, 100).unwrap(),
            Ratio::from_integer(1)
        );
        let t4 = tau_n(MoveRule::Knight, 4, u64::MAX).unwrap();
        let cells: CellSet = Board::square(4).unwrap().cells().collect();
        let (w, _) =
            brute_force_max_weight(&WeightedCellSet::uniform(&cells), MoveRule::Knight).unwrap();
        assert_eq!(t4, Ratio::new(w, 16));
        assert_eq!(t4, Ratio::new(3, 4));
        assert!(tau_n(MoveRule::Knight, 6, 10).is_err());
    }

    #[test]
    fn tau_covering_inequality() {
        let taus: Vec<Ratio<u64>> = (1..=5)
            .map(|n| tau_n(MoveRule::Knight, n, u64::MAX).unwrap())
            .collect();
        for n in 1..=5u64 {
            for big in n * n..=5 {
                let tiles = big.div_ceil(n).pow(2);
                let lhs = taus[big as usize - 1] * Ratio::from_integer(big * big);
                assert!(lhs <= taus[n as usize - 1] * Ratio::from_integer(n * n * tiles));
            }
        }
    }

    #[test]
    fn tesseract_bound_is_valid() {
        let g = WeightedCellSet::uniform(&build_tesseract_set());
        let b = capacity_upper_bound(&g, Ratio::new(9, 16), 12, 12);
        assert!(b >= 72);
    }
}
