//! Stamp-folding permutations.
//!
//! `sigma[p]` is the stamp at stack position `p`. Crease `i` joins stamps
//! `i` and `i + 1` and lies on the left of the stack when `i` is even, on
//! the right when odd. "u lies between v and w" always compares stack
//! positions.

use crate::error::{invalid, Error, Result};

/// Largest strip length [`enumerate_stamp_foldings`] accepts by default.
pub const DEFAULT_STAMP_CAP: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StampFolding {
    sigma: Vec<usize>,
}

impl StampFolding {
    /// Wraps a permutation of `0..s`; validity as a folding is not checked.
    pub fn new(sigma: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; sigma.len()];
        for &v in &sigma {
            if v >= sigma.len() || std::mem::replace(&mut seen[v], true) {
                return Err(invalid(format!("{sigma:?} is not a permutation")));
            }
        }
        Ok(StampFolding { sigma })
    }

    pub fn identity(s: usize) -> Self {
        StampFolding {
            sigma: (0..s).collect(),
        }
    }

    /// The permutation `0, 2, 3, ..., k-1, 1`.
    pub fn rotated_tail(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(invalid("rotated tail needs k >= 2"));
        }
        let mut sigma = vec![0];
        sigma.extend(2..k);
        sigma.push(1);
        StampFolding::new(sigma)
    }

    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    /// Stack position of each stamp.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.len()];
        for (p, &v) in self.sigma.iter().enumerate() {
            pos[v] = p;
        }
        pos
    }

    /// Whether stamp `u` sits strictly between stamps `v` and `w`.
    pub fn between(&self, pos: &[usize], u: usize, v: usize, w: usize) -> bool {
        let (a, b) = (pos[v].min(pos[w]), pos[v].max(pos[w]));
        a < pos[u] && pos[u] < b
    }

    /// Number of even `j` (for `parity = 0`) or odd `j` (`parity = 1`) with
    /// stamp `i` strictly between `j` and `j + 1`.
    fn omega(&self, pos: &[usize], i: usize, parity: usize) -> usize {
        (0..self.len().saturating_sub(1))
            .filter(|j| j % 2 == parity && self.between(pos, i, *j, j + 1))
            .count()
    }

    pub fn omega_left(&self, i: usize) -> usize {
        self.omega(&self.positions(), i, 0)
    }

    pub fn omega_right(&self, i: usize) -> usize {
        self.omega(&self.positions(), i, 1)
    }
}

/// No two creases on the same side cross: there are no `i`, `j` of equal
/// parity with exactly one of `i`, `i + 1` between `j` and `j + 1`.
pub fn is_stamp_folding(sf: &StampFolding) -> bool {
    let s = sf.len();
    let pos = sf.positions();
    for i in 0..s.saturating_sub(1) {
        for j in (i % 2..s - 1).step_by(2) {
            if sf.between(&pos, i, j, j + 1) != sf.between(&pos, i + 1, j, j + 1) {
                return false;
            }
        }
    }
    true
}

/// All stamp-folding permutations of `s` stamps, sorted, with the default
/// size cap.
pub fn enumerate_stamp_foldings(s: usize) -> Result<Vec<StampFolding>> {
    enumerate_stamp_foldings_capped(s, DEFAULT_STAMP_CAP)
}

pub fn enumerate_stamp_foldings_capped(s: usize, cap: usize) -> Result<Vec<StampFolding>> {
    if s == 0 {
        return Err(invalid("need at least one stamp"));
    }
    if s > cap {
        return Err(Error::Limit(format!("{s} stamps exceeds the cap of {cap}")));
    }
    // Insert stamps one at a time; a new crease can only cross creases
    // already present, so partial stacks are pruned early.
    let mut out = Vec::new();
    let mut stack = vec![0usize];
    grow(&mut stack, 1, s, &mut out);
    out.sort();
    Ok(out)
}

fn grow(stack: &mut Vec<usize>, next: usize, s: usize, out: &mut Vec<StampFolding>) {
    if next == s {
        out.push(StampFolding {
            sigma: stack.clone(),
        });
        return;
    }
    for p in 0..=stack.len() {
        stack.insert(p, next);
        let mut pos = vec![0; next + 1];
        for (q, &v) in stack.iter().enumerate() {
            pos[v] = q;
        }
        let crease = next - 1;
        let (a, b) = (pos[crease].min(pos[next]), pos[crease].max(pos[next]));
        let crosses = (crease % 2..crease).step_by(2).any(|j| {
            let (c, d) = (pos[j].min(pos[j + 1]), pos[j].max(pos[j + 1]));
            (a < c && c < b) != (a < d && d < b)
        });
        if !crosses {
            grow(stack, next + 1, s, out);
        }
        stack.remove(p);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Semicircles drawn as actual circles in doubled coordinates: crease
    /// `i` is the circle centred on the stack axis at the midpoint of its
    /// two stamps. Two creases on the same side meet iff their circles
    /// intersect away from the axis.
    fn crosses_geometrically(sigma: &[usize]) -> bool {
        let s = sigma.len();
        let mut pos = vec![0i64; s];
        for (p, &v) in sigma.iter().enumerate() {
            pos[v] = p as i64;
        }
        let circle = |i: usize| {
            let (a, b) = (pos[i], pos[i + 1]);
            (a + b, (a - b).abs())
        };
        for i in 0..s.saturating_sub(1) {
            for j in (i + 2..s - 1).step_by(2) {
                let (c1, r1) = circle(i);
                let (c2, r2) = circle(j);
                let d = (c1 - c2).abs();
                if (r1 - r2).abs() < d && d < r1 + r2 {
                    return true;
                }
            }
        }
        false
    }

    fn permutations(s: usize) -> Vec<Vec<usize>> {
        if s == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(s - 1) {
            for k in 0..s {
                let mut q = p.clone();
                q.insert(k, s - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn combinatorial_matches_geometric_on_all_small_permutations() {
        for s in 1..=7 {
            for p in permutations(s) {
                let sf = StampFolding::new(p.clone()).unwrap();
                assert_eq!(is_stamp_folding(&sf), !crosses_geometrically(&p), "{p:?}");
            }
        }
    }

    #[test]
    fn counts_from_geometric_oracle() {
        // Frozen from filtering all s! permutations through the oracle.
        let oracle: Vec<usize> = (1..=7)
            .map(|s| {
                permutations(s)
                    .into_iter()
                    .filter(|p| !crosses_geometrically(p))
                    .count()
            })
            .collect();
        assert_eq!(oracle, vec![1, 2, 6, 16, 50, 144, 462]);
        let fast: Vec<usize> = (1..=10)
            .map(|s| enumerate_stamp_foldings(s).unwrap().len())
            .collect();
        assert_eq!(fast, vec![1, 2, 6, 16, 50, 144, 462, 1392, 4536, 14060]);
    }

    #[test]
    fn spec_examples() {
        let ex = StampFolding::new(vec![1, 0, 2, 7, 4, 5, 6, 3]).unwrap();
        assert!(is_stamp_folding(&ex));
        assert!(is_stamp_folding(&StampFolding::identity(3)));
        let bad = StampFolding::new(vec![0, 2, 1, 3]).unwrap();
        assert!(crosses_geometrically(bad.sigma()));
        assert!(!is_stamp_folding(&bad));
        assert_eq!(
            permutations(4)
                .iter()
                .filter(|p| crosses_geometrically(p))
                .count(),
            8
        );
        assert!(StampFolding::new(vec![0, 0]).is_err());
        assert!(enumerate_stamp_foldings(11).is_err());
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        let all = enumerate_stamp_foldings(6).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(is_stamp_folding));
    }

    proptest! {
        #[test]
        fn random_permutations_agree(seed in proptest::collection::vec(any::<u32>(), 1..10)) {
            let mut idx: Vec<usize> = (0..seed.len()).collect();
            idx.sort_by_key(|&i| (seed[i], i));
            let sf = StampFolding::new(idx.clone()).unwrap();
            prop_assert_eq!(is_stamp_folding(&sf), !crosses_geometrically(&idx));
        }
    }
}
