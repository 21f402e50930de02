use num_bigint::BigUint;
use num_traits::One;

use crate::{is_prime, NumthError};

/// Prime factorization `n = prod p^e`, primes strictly increasing.
///
/// The value is not stored; it may exceed `u64` when the factorization is
/// built from explicit pairs (e.g. `2^200 * 15`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

/// Factorizes `n >= 1` by trial division, finishing with a primality test on
/// the cofactor.
pub fn factorize(n: u64) -> Result<Factorization, NumthError> {
    if n == 0 {
        return Err(NumthError::Zero);
    }
    let mut rest = n;
    let mut factors = Vec::new();
    let mut take = |rest: &mut u64, p: u64| {
        let mut e = 0;
        while *rest % p == 0 {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    take(&mut rest, 2);
    take(&mut rest, 3);
    let mut p = 5u64;
    while rest > 1 && p.saturating_mul(p) <= rest {
        if is_prime(rest) {
            break;
        }
        take(&mut rest, p);
        take(&mut rest, p + 2);
        p += 6;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { factors })
}

impl Factorization {
    /// The empty factorization, representing 1.
    pub fn one() -> Self {
        Self::default()
    }

    /// Builds a factorization from `(prime, exponent)` pairs in any order.
    /// Pairs with exponent 0 are dropped; repeated primes are rejected.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, u32)>) -> Result<Self, NumthError> {
        let mut factors: Vec<(u64, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        factors.sort_unstable();
        for w in factors.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(NumthError::BadFactors(format!("prime {} repeated", w[0].0)));
            }
        }
        if let Some(&(p, _)) = factors.iter().find(|&&(p, _)| !is_prime(p)) {
            return Err(NumthError::NotPrime(p));
        }
        Ok(Self { factors })
    }

    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn value(&self) -> BigUint {
        self.factors.iter().fold(BigUint::one(), |acc, &(p, e)| acc * BigUint::from(p).pow(e))
    }

    /// The represented integer, if it fits in a `u64`.
    pub fn value_u64(&self) -> Option<u64> {
        self.factors.iter().try_fold(1u64, |acc, &(p, e)| p.checked_pow(e).and_then(|q| acc.checked_mul(q)))
    }

    /// Exponent of `p` in n (0 when p does not divide n).
    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors.iter().find(|&&(q, _)| q == p).map_or(0, |&(_, e)| e)
    }

    /// The p-part `p^e` of n.
    pub fn p_part(&self, p: u64) -> BigUint {
        BigUint::from(p).pow(self.exponent_of(p))
    }

    /// Factorization of `n / n_p`.
    pub fn without(&self, p: u64) -> Self {
        Self { factors: self.factors.iter().copied().filter(|&(q, _)| q != p).collect() }
    }

    /// Factorization of the product of `self` and `other`.
    pub fn times(&self, other: &Self) -> Self {
        let mut merged = self.factors.clone();
        for &(p, e) in &other.factors {
            match merged.iter_mut().find(|(q, _)| *q == p) {
                Some(entry) => entry.1 += e,
                None => merged.push((p, e)),
            }
        }
        merged.sort_unstable();
        Self { factors: merged }
    }

    /// Largest prime-power divisor; 1 for n = 1.
    pub fn lpp(&self) -> BigUint {
        self.factors.iter().map(|&(p, e)| BigUint::from(p).pow(e)).max().unwrap_or_else(BigUint::one)
    }

    /// Number of prime factors counted with multiplicity.
    pub fn omega(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| u64::from(e)).sum()
    }

    /// Sum of prime factors counted with multiplicity.
    pub fn omega1(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p * u64::from(e)).sum()
    }

    /// `omega1 - omega`: the rank of the divisor lattice of n.
    pub fn big_k(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| (p - 1) * u64::from(e)).sum()
    }

    /// Chain sizes `e + 1` of the divisor lattice, one per prime.
    pub fn chain_sizes(&self) -> Vec<u64> {
        self.factors.iter().map(|&(_, e)| u64::from(e) + 1).collect()
    }

    /// Number of divisors.
    pub fn divisor_count(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| u64::from(e) + 1).product()
    }
}

impl std::fmt::Display for Factorization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, &(p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            match e {
                1 => write!(f, "{p}")?,
                _ => write!(f, "{p}^{e}")?,
            }
        }
        Ok(())
    }
}
