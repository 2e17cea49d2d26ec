//! Weighted cell sets: multiset sums, the tesseract set and the pancake.

use std::collections::BTreeMap;

use crate::cell::{Cell, CellSet};
use crate::error::{invalid, Result};

/// Cells with positive integer weights.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WeightedCellSet {
    weights: BTreeMap<Cell, u64>,
}

impl WeightedCellSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Every weight must be at least 1.
    pub fn from_weights(weights: impl IntoIterator<Item = (Cell, u64)>) -> Result<Self> {
        let mut out = WeightedCellSet::new();
        for (c, w) in weights {
            if w == 0 {
                return Err(invalid(format!("cell {c} has weight 0")));
            }
            if out.weights.insert(c, w).is_some() {
                return Err(invalid(format!("cell {c} is listed twice")));
            }
        }
        Ok(out)
    }

    /// All cells with weight 1.
    pub fn uniform(cells: &CellSet) -> Self {
        WeightedCellSet {
            weights: cells.iter().map(|c| (c, 1)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weight(&self, c: Cell) -> u64 {
        self.weights.get(&c).copied().unwrap_or(0)
    }

    pub fn total_weight(&self) -> u64 {
        self.weights.values().sum()
    }

    pub fn weight_of(&self, s: &CellSet) -> u64 {
        s.iter().map(|c| self.weight(c)).sum()
    }

    pub fn cells(&self) -> CellSet {
        self.weights.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Cell, u64)> + '_ {
        self.weights.iter().map(|(&c, &w)| (c, w))
    }

    fn add(&mut self, c: Cell, w: u64) {
        *self.weights.entry(c).or_insert(0) += w;
    }
}

/// The multiset of all sums `a + b`, weighted by the number of ways each
/// arises.
pub fn multiset_sum(s1: &CellSet, s2: &CellSet) -> Result<WeightedCellSet> {
    if s1.is_empty() || s2.is_empty() {
        return Err(invalid("multiset sum of an empty set"));
    }
    let mut out = WeightedCellSet::new();
    for a in s1.iter() {
        for b in s2.iter() {
            out.add(a + b, 1);
        }
    }
    Ok(out)
}

/// The 16 cells `e1 (2,1) + e2 (1,2) + e3 (-1,2) + e4 (-2,1)`, `ei ∈ {0,1}`.
pub fn build_tesseract_set() -> CellSet {
    let gens = [
        Cell::new(2, 1),
        Cell::new(1, 2),
        Cell::new(-1, 2),
        Cell::new(-2, 1),
    ];
    (0u32..16)
        .map(|mask| {
            (0..4)
                .filter(|i| mask >> i & 1 == 1)
                .fold(Cell::new(0, 0), |acc, i| acc + gens[i])
        })
        .collect()
}

/// `[0;3]²` without its four corners.
pub fn aztec_diamond() -> CellSet {
    (0..4)
        .flat_map(|y| (0..4).map(move |x| Cell::new(x, y)))
        .filter(|c| !((c.x == 0 || c.x == 3) && (c.y == 0 || c.y == 3)))
        .collect()
}

/// The weighted knight graph of the diamond plus the tesseract set.
pub fn build_pancake() -> WeightedCellSet {
    multiset_sum(&aztec_diamond(), &build_tesseract_set()).expect("non-empty summands")
}

/// The twelve tesseract translates that add up to the pancake.
pub fn pancake_cover() -> Vec<CellSet> {
    let t = build_tesseract_set();
    aztec_diamond().iter().map(|d| t.translated(d)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{components, set_degree};
    use crate::rules::MoveRule;
    use std::collections::VecDeque;

    fn set(cells: &[(i32, i32)]) -> CellSet {
        cells.iter().map(|&(x, y)| Cell::new(x, y)).collect()
    }

    #[test]
    fn sums() {
        let s = set(&[(0, 0), (5, 1), (2, 7)]);
        let id = multiset_sum(&set(&[(0, 0)]), &s).unwrap();
        assert_eq!(id, WeightedCellSet::uniform(&s));
        let b = multiset_sum(&set(&[(0, 0), (1, 0)]), &set(&[(0, 0), (1, 0)])).unwrap();
        let w: Vec<u64> = b.iter().map(|(_, w)| w).collect();
        assert_eq!(w, vec![1, 2, 1]);
        assert!(multiset_sum(&CellSet::new(), &s).is_err());
    }

    #[test]
    fn tesseract() {
        let t = build_tesseract_set();
        assert_eq!(t.len(), 16);
        assert!(t.iter().all(|c| set_degree(MoveRule::Knight, &t, c) == 4));
        let edges: usize = t
            .iter()
            .map(|c| set_degree(MoveRule::Knight, &t, c))
            .sum::<usize>()
            / 2;
        assert_eq!(edges, 32);
        assert_eq!(components(MoveRule::Knight, &t).len(), 1);
        // Diameter by breadth-first search from every cell.
        let cells: Vec<Cell> = t.iter().collect();
        let mut diameter = 0;
        for &s in &cells {
            let mut dist = std::collections::BTreeMap::from([(s, 0)]);
            let mut q = VecDeque::from([s]);
            while let Some(a) = q.pop_front() {
                for &b in &cells {
                    if MoveRule::Knight.adjacent(a, b) && !dist.contains_key(&b) {
                        dist.insert(b, dist[&a] + 1);
                        q.push_back(b);
                    }
                }
            }
            diameter = diameter.max(*dist.values().max().unwrap());
        }
        assert_eq!(diameter, 4);
    }

    #[test]
    fn pancake() {
        assert_eq!(aztec_diamond().len(), 12);
        let p = build_pancake();
        assert_eq!((p.len(), p.total_weight()), (68, 192));
    }

    #[test]
    fn zero_weight_rejected() {
        assert!(WeightedCellSet::from_weights([(Cell::new(0, 0), 0)]).is_err());
    }
}
