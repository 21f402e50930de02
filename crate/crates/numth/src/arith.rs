use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::{factorize, is_prime, NumthError, Rational};

/// The p-part of n: the largest power of `p` dividing `n`.
pub fn p_part(n: u64, p: u64) -> Result<u64, NumthError> {
    if n == 0 {
        return Err(NumthError::Zero);
    }
    if !is_prime(p) {
        return Err(NumthError::NotPrime(p));
    }
    let mut part = 1;
    let mut rest = n;
    while rest % p == 0 {
        rest /= p;
        part *= p;
    }
    Ok(part)
}

/// Largest prime-power divisor of n, with `lpp(1) = 1`. Returns 0 for n = 0.
pub fn lpp(n: u64) -> u64 {
    match factorize(n) {
        Ok(f) => f.pairs().iter().map(|&(p, e)| p.pow(e)).max().unwrap_or(1),
        Err(_) => 0,
    }
}

/// Number of prime factors of n counted with multiplicity (0 for n <= 1).
pub fn omega(n: u64) -> u64 {
    factorize(n).map_or(0, |f| f.omega())
}

/// Sum of the prime factors of n counted with multiplicity (0 for n <= 1).
pub fn omega1(n: u64) -> u64 {
    factorize(n).map_or(0, |f| f.omega1())
}

/// `omega1(n) - omega(n)`, the rank of the divisor lattice of n.
pub fn big_k(n: u64) -> u64 {
    factorize(n).map_or(0, |f| f.big_k())
}

/// `(n / 2^K) * C(K, floor(K/2))` with `K = big_k(n)`, exactly.
pub fn ws(n: u64) -> Result<Rational, NumthError> {
    if n < 2 {
        return Err(NumthError::WsDomain(n));
    }
    Ok(ws_of(&factorize(n)?))
}

pub(crate) fn ws_of(f: &crate::Factorization) -> Rational {
    let k = f.big_k();
    let num = BigInt::from(f.value() * central_binom(k));
    let den = BigInt::one() << k;
    Rational::new(num, den)
}

impl crate::Factorization {
    /// `ws` of the represented integer; see [`ws`]. Requires n >= 2.
    pub fn ws(&self) -> Result<Rational, NumthError> {
        if self.is_one() {
            return Err(NumthError::WsDomain(1));
        }
        Ok(ws_of(self))
    }
}

/// Binomial coefficient, 0 when `k > n`.
pub fn binom(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(k, floor(k/2))`, the largest entry of row k of Pascal's triangle.
pub fn central_binom(k: u64) -> BigUint {
    binom(k, k / 2)
}

/// All positive divisors of n in increasing order (empty for n = 0).
pub fn divisors(n: u64) -> Vec<u64> {
    let Ok(f) = factorize(n) else {
        return Vec::new();
    };
    let mut out = vec![1u64];
    for &(p, e) in f.pairs() {
        let len = out.len();
        let mut q = 1u64;
        for _ in 0..e {
            q *= p;
            for i in 0..len {
                out.push(out[i] * q);
            }
        }
    }
    out.sort_unstable();
    out
}

/// `floor(log2 n)` for n >= 1.
pub fn floor_log2(n: &BigUint) -> u64 {
    n.bits().saturating_sub(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn p_parts() {
        assert_eq!(p_part(12, 2), Ok(4));
        assert_eq!(p_part(12, 5), Ok(1));
        assert_eq!(p_part((1 << 17) * 5, 2), Ok(1 << 17));
        assert_eq!(p_part(12, 4), Err(NumthError::NotPrime(4)));
    }

    #[test]
    fn lpp_values() {
        assert_eq!(lpp(12), 4);
        assert_eq!(lpp(45), 9);
        assert_eq!(lpp(1), 1);
        assert_eq!(lpp(97), 97);
    }

    #[test]
    fn omegas() {
        assert_eq!((omega(12), omega1(12), big_k(12)), (3, 7, 4));
        assert_eq!(big_k(1 << 20), 20);
        assert_eq!((omega(1), omega1(1), big_k(1)), (0, 0, 0));
    }

    #[test]
    fn ws_values() {
        assert_eq!(ws(8), Ok(rat(3, 1)));
        assert_eq!(ws(12), Ok(rat(9, 2)));
        assert_eq!(ws(2), Ok(rat(1, 1)));
        assert_eq!(ws(24), Ok(rat(15, 2)));
        assert_eq!(ws(96), Ok(rat(105, 4)));
        assert_eq!(ws(1), Err(NumthError::WsDomain(1)));
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(4, 2), BigUint::from(6u32));
        assert_eq!(binom(32, 16), BigUint::from(601_080_390u32));
        assert_eq!(binom(3, 5), BigUint::zero());
        assert_eq!(binom(0, 0), BigUint::one());
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert!(divisors(0).is_empty());
        assert_eq!(floor_log2(&BigUint::from(1024u32)), 10);
        assert_eq!(floor_log2(&BigUint::from(1023u32)), 9);
    }
}
