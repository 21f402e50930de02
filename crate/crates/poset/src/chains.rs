use num_bigint::BigInt;
use transgen_numth::{binom, factorize, Rational};

use crate::finite::FinitePoset;
use crate::matching::{width_by_matching, UpperSets};
use crate::PosetError;

/// Largest cardinality accepted by [`ChainProduct::width_oracle`].
pub const ORACLE_LIMIT: u128 = 10_000;

/// Cartesian product of chains of sizes `k_1, ..., k_t`, ordered
/// coordinatewise. The divisors of `m = prod p_i^(k_i - 1)` form such a
/// product, with the rank of a divisor being its number of prime factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChainProduct {
    sizes: Vec<u64>,
    cardinality: u128,
}

impl ChainProduct {
    /// Chains of size 1 are allowed; they contribute nothing.
    pub fn new(sizes: impl IntoIterator<Item = u64>) -> Result<Self, PosetError> {
        let sizes: Vec<u64> = sizes.into_iter().collect();
        let mut cardinality: u128 = 1;
        for &k in &sizes {
            if k == 0 {
                return Err(PosetError::EmptyChain);
            }
            cardinality = cardinality
                .checked_mul(u128::from(k))
                .ok_or(PosetError::TooLarge { size: u128::MAX, limit: u128::MAX })?;
        }
        Ok(Self { sizes, cardinality })
    }

    /// The divisor lattice of `n`, one chain of size `e + 1` per prime power `p^e || n`.
    pub fn from_divisors(n: u64) -> Result<Self, PosetError> {
        let f = factorize(n)?;
        Self::new(f.pairs().iter().map(|&(_, e)| u64::from(e) + 1))
    }

    /// One chain of size `p` for every prime factor `p` of `n`, counted with
    /// multiplicity. Its cardinality is `n` and its `K` is `K(n)`, so the
    /// width bound of this product is `ws(n)`.
    pub fn prime_chains(n: u64) -> Result<Self, PosetError> {
        let f = factorize(n)?;
        Self::new(f.pairs().iter().flat_map(|&(p, e)| std::iter::repeat(p).take(e as usize)))
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn cardinality(&self) -> u128 {
        self.cardinality
    }

    /// Rank of the top element, `K = sum (k_i - 1)`.
    pub fn big_k(&self) -> u64 {
        self.sizes.iter().map(|k| k - 1).sum()
    }

    /// `|R_k|` for `k = 0..=K`: the coefficients of `prod (1 + x + ... + x^(k_i - 1))`.
    pub fn rank_level_counts(&self) -> Vec<u128> {
        let mut counts = vec![1u128];
        for &k in self.sizes.iter().filter(|&&k| k > 1) {
            let k = k as usize;
            let mut next = vec![0u128; counts.len() + k - 1];
            // Sliding window sum of width k over the previous coefficients.
            let mut window = 0u128;
            for (j, slot) in next.iter_mut().enumerate() {
                if let Some(&c) = counts.get(j) {
                    window += c;
                }
                if j >= k {
                    window -= counts[j - k];
                }
                *slot = window;
            }
            counts = next;
        }
        counts
    }

    /// Size of the middle rank level `R_{floor(K/2)}`, which is the width of
    /// the product by de Bruijn's symmetric chain decomposition.
    pub fn width_rank(&self) -> u128 {
        let counts = self.rank_level_counts();
        counts[counts.len() / 2]
    }

    /// Width computed by Dilworth's theorem through a maximum matching,
    /// independently of rank levels.
    pub fn width_oracle(&self) -> Result<u64, PosetError> {
        if self.cardinality > ORACLE_LIMIT {
            return Err(PosetError::TooLarge { size: self.cardinality, limit: ORACLE_LIMIT });
        }
        Ok(width_by_matching(&Grid::new(self)) as u64)
    }

    /// `(n / 2^K) * C(K, floor(K/2))`, an upper bound for the width.
    pub fn lemma31_bound(&self) -> Result<Rational, PosetError> {
        if self.cardinality < 2 {
            return Err(PosetError::TooSmall);
        }
        let k = self.big_k();
        let num = BigInt::from(self.cardinality) * BigInt::from(binom(k, k / 2));
        Ok(Rational::new(num, BigInt::from(1u8) << k))
    }

    /// The same poset with explicit elements, for the exhaustive oracles.
    /// Elements are indexed in mixed radix with the last chain varying fastest.
    pub fn to_finite(&self) -> Result<FinitePoset, PosetError> {
        let limit = crate::finite::EXPLICIT_LIMIT as u128;
        if self.cardinality > limit {
            return Err(PosetError::TooLarge { size: self.cardinality, limit });
        }
        let grid = Grid::new(self);
        let n = grid.len();
        let pairs = (0..n).flat_map(|x| {
            let grid = &grid;
            std::iter::successors(grid.next_above(x, None), move |&y| grid.next_above(x, Some(y))).map(move |y| (x, y))
        });
        FinitePoset::from_relation(n, pairs)
    }
}

/// Elements of a chain product addressed by mixed-radix index.
struct Grid {
    sizes: Vec<usize>,
    len: usize,
}

/// Chains of size >= 2 in a grid; cardinality <= 10^4 keeps this below 14.
const MAX_GRID_RANK: usize = 16;

impl Grid {
    fn new(p: &ChainProduct) -> Self {
        let sizes: Vec<usize> = p.sizes.iter().filter(|&&k| k > 1).map(|&k| k as usize).collect();
        assert!(sizes.len() <= MAX_GRID_RANK, "grids are only built for small posets");
        Self { len: p.cardinality as usize, sizes }
    }

    fn decode(&self, mut index: usize, out: &mut [usize]) {
        for (slot, &k) in out.iter_mut().zip(&self.sizes).rev() {
            *slot = index % k;
            index /= k;
        }
    }

    fn encode(&self, coords: &[usize]) -> usize {
        coords.iter().zip(&self.sizes).fold(0, |acc, (&c, &k)| acc * k + c)
    }
}

impl UpperSets for Grid {
    fn len(&self) -> usize {
        self.len
    }

    fn next_above(&self, x: usize, after: Option<usize>) -> Option<usize> {
        let t = self.sizes.len();
        let mut low_buf = [0usize; MAX_GRID_RANK];
        let mut cur_buf = [0usize; MAX_GRID_RANK];
        let (low, cur) = (&mut low_buf[..t], &mut cur_buf[..t]);
        self.decode(x, low);
        self.decode(after.unwrap_or(x), cur);
        // Odometer step inside the box [low, sizes); `after` is always in the box.
        for i in (0..t).rev() {
            if cur[i] + 1 < self.sizes[i] {
                cur[i] += 1;
                cur[i + 1..].copy_from_slice(&low[i + 1..]);
                return Some(self.encode(cur));
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chains(s: &[u64]) -> ChainProduct {
        ChainProduct::new(s.iter().copied()).unwrap()
    }

    #[test]
    fn level_counts() {
        assert_eq!(chains(&[3, 2]).rank_level_counts(), vec![1, 2, 2, 1]);
        assert_eq!(chains(&[2, 2, 2]).rank_level_counts(), vec![1, 3, 3, 1]);
        assert_eq!(chains(&[5]).rank_level_counts(), vec![1; 5]);
        assert_eq!(chains(&[1, 1]).rank_level_counts(), vec![1]);
    }

    #[test]
    fn widths() {
        assert_eq!(chains(&[3, 2]).width_rank(), 2);
        assert_eq!(chains(&[2, 2, 2, 2]).width_rank(), 6);
        assert_eq!(chains(&[7]).width_rank(), 1);
        assert_eq!(chains(&[3, 2]).width_oracle(), Ok(2));
        assert_eq!(chains(&[2, 2]).width_oracle(), Ok(2));
        assert_eq!(chains(&[9]).width_oracle(), Ok(1));
        assert_eq!(chains(&[1]).width_oracle(), Ok(1));
    }

    #[test]
    fn bound_values() {
        assert_eq!(chains(&[3, 2]).lemma31_bound(), Ok(Rational::new(9.into(), 4.into())));
        assert_eq!(ChainProduct::prime_chains(12).unwrap().lemma31_bound(), Ok(Rational::new(9.into(), 2.into())));
        assert_eq!(chains(&[2]).lemma31_bound(), Ok(Rational::from_integer(1.into())));
        assert_eq!(chains(&[1]).lemma31_bound(), Err(PosetError::TooSmall));
    }

    #[test]
    fn divisor_lattice_of_twelve() {
        let p = ChainProduct::from_divisors(12).unwrap();
        assert_eq!(p.sizes(), &[3, 2]);
        assert_eq!(p.cardinality(), 6);
        assert_eq!(p.big_k(), 3);
    }

    #[test]
    fn guards() {
        assert_eq!(ChainProduct::new([2, 0]), Err(PosetError::EmptyChain));
        assert!(matches!(chains(&[10_001]).width_oracle(), Err(PosetError::TooLarge { .. })));
    }

    #[test]
    fn upper_sets_in_grid() {
        let p = chains(&[3, 2]);
        let g = Grid::new(&p);
        // Index = 2*a + b for coordinates (a, b); element (1, 0) = 2 lies below 3, 4, 5.
        let above: Vec<usize> = std::iter::successors(g.next_above(2, None), |&y| g.next_above(2, Some(y))).collect();
        assert_eq!(above, vec![3, 4, 5]);
    }
}
