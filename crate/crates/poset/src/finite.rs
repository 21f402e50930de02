use crate::matching::{width_by_matching, UpperSets};
use crate::PosetError;

/// Largest poset that can be held as bitmask rows.
pub(crate) const EXPLICIT_LIMIT: usize = 64;

/// Largest poset accepted by the exhaustive antichain search.
pub const EXHAUSTIVE_LIMIT: usize = 24;

/// A strict partial order on `0..n` for `n <= 64`, stored as the transitive
/// closure: bit `y` of `above[x]` is set iff `x < y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    above: Vec<u64>,
}

impl FinitePoset {
    /// Builds the order generated by the given pairs `x < y`. The transitive
    /// closure is taken; cycles (including `x < x`) are rejected.
    pub fn from_relation(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, PosetError> {
        if n > EXPLICIT_LIMIT {
            return Err(PosetError::TooLarge { size: n as u128, limit: EXPLICIT_LIMIT as u128 });
        }
        let mut above = vec![0u64; n];
        for (x, y) in pairs {
            if x >= n || y >= n {
                return Err(PosetError::NotAnOrder(format!("pair ({x}, {y}) outside 0..{n}")));
            }
            above[x] |= 1 << y;
        }
        // Warshall closure on bit rows.
        for k in 0..n {
            for x in 0..n {
                if above[x] >> k & 1 == 1 {
                    above[x] |= above[k];
                }
            }
        }
        if let Some(x) = (0..n).find(|&x| above[x] >> x & 1 == 1) {
            return Err(PosetError::NotAnOrder(format!("element {x} lies on a cycle")));
        }
        Ok(Self { above })
    }

    pub fn len(&self) -> usize {
        self.above.len()
    }

    pub fn is_empty(&self) -> bool {
        self.above.is_empty()
    }

    pub fn less(&self, x: usize, y: usize) -> bool {
        self.above[x] >> y & 1 == 1
    }

    fn comparable_mask(&self, x: usize) -> u64 {
        let below = (0..self.len()).filter(|&y| self.less(y, x)).fold(0u64, |m, y| m | 1 << y);
        self.above[x] | below
    }

    /// Number of elements in a longest chain (0 for the empty poset).
    pub fn longest_chain(&self) -> usize {
        // Elements with larger upper sets come first in any linear extension
        // read backwards, so settle heights from the top down.
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| self.above[x].count_ones());
        let mut height = vec![0usize; n];
        for &x in &order {
            height[x] = 1 + (0..n).filter(|&y| self.less(x, y)).map(|y| height[y]).max().unwrap_or(0);
        }
        height.into_iter().max().unwrap_or(0)
    }

    /// Largest antichain by complete search over subsets, with the only
    /// pruning being that a branch cannot beat the best found so far.
    pub fn width_exhaustive(&self) -> Result<usize, PosetError> {
        let n = self.len();
        if n > EXHAUSTIVE_LIMIT {
            return Err(PosetError::TooLarge { size: n as u128, limit: EXHAUSTIVE_LIMIT as u128 });
        }
        let comparable: Vec<u64> = (0..n).map(|x| self.comparable_mask(x)).collect();
        let mut best = 0;
        search(&comparable, 0, 0, 0, &mut best);
        Ok(best)
    }

    /// Largest antichain by Dilworth's theorem and bipartite matching.
    pub fn width_matching(&self) -> usize {
        width_by_matching(self)
    }
}

fn search(comparable: &[u64], next: usize, chosen: u64, size: usize, best: &mut usize) {
    *best = (*best).max(size);
    if next == comparable.len() || size + comparable.len() - next <= *best {
        return;
    }
    if comparable[next] & chosen == 0 {
        search(comparable, next + 1, chosen | 1 << next, size + 1, best);
    }
    search(comparable, next + 1, chosen, size, best);
}

impl UpperSets for FinitePoset {
    fn len(&self) -> usize {
        self.above.len()
    }

    fn next_above(&self, x: usize, after: Option<usize>) -> Option<usize> {
        let from = after.map_or(0, |a| a + 1);
        if from >= 64 {
            return None;
        }
        let rest = self.above[x] >> from << from;
        (rest != 0).then(|| rest.trailing_zeros() as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_and_cycles() {
        let p = FinitePoset::from_relation(3, [(0, 1), (1, 2)]).unwrap();
        assert!(p.less(0, 2));
        assert_eq!(p.longest_chain(), 3);
        assert_eq!(p.width_exhaustive(), Ok(1));
        assert_eq!(p.width_matching(), 1);
        assert!(FinitePoset::from_relation(2, [(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn antichain_and_crown() {
        let empty = FinitePoset::from_relation(5, []).unwrap();
        assert_eq!(empty.width_exhaustive(), Ok(5));
        assert_eq!(empty.width_matching(), 5);
        assert_eq!(empty.longest_chain(), 1);
        // Crown on 3 + 3 elements: each bottom below two tops.
        let crown = FinitePoset::from_relation(6, [(0, 3), (0, 4), (1, 4), (1, 5), (2, 5), (2, 3)]).unwrap();
        assert_eq!(crown.width_exhaustive(), Ok(3));
        assert_eq!(crown.width_matching(), 3);
    }

    #[test]
    fn chain_product_matches_explicit_form() {
        let p = crate::ChainProduct::new([3, 2, 2]).unwrap().to_finite().unwrap();
        assert_eq!(p.len(), 12);
        assert_eq!(p.width_exhaustive(), Ok(4));
        assert_eq!(p.longest_chain(), 5);
    }
}
