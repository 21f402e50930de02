//! Arithmetic around minimally transitive groups of degree `2^m * 3` whose
//! nonabelian chief factor is a power of `L_2(p)` for a Mersenne prime
//! `p = 2^e - 1 >= 31`: the admissible `(e, r, t)` triples and the orbit
//! sizes they induce.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;
use transgen_numth::binom;

/// Smallest admissible exponent: `p >= 31`.
pub const MIN_EXPONENT: u32 = 5;

/// Largest `m` accepted by [`enumerate_triples`].
pub const MAX_M: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MersenneError {
    #[error("2^{0} - 1 is not a prime of at least 31")]
    NotMersenne(u32),
    #[error("r must be at least 1")]
    ZeroRank,
    #[error("t1 = {t1} exceeds t = {t}")]
    T1OutOfRange { t1: u32, t: u32 },
    #[error("m = {0} is outside 1..={MAX_M}")]
    MOutOfRange(u32),
}

/// True iff `2^e - 1` is prime (Lucas-Lehmer for odd `e`).
pub fn is_mersenne_exponent(e: u32) -> bool {
    match e {
        0 | 1 => false,
        2 => true,
        _ if !transgen_numth::is_prime(u64::from(e)) => false,
        _ if e <= 64 => lucas_lehmer_u128(e),
        _ => lucas_lehmer_big(e),
    }
}

fn lucas_lehmer_u128(e: u32) -> bool {
    let m: u128 = (1u128 << e) - 1;
    let mut s: u128 = 4;
    for _ in 0..e - 2 {
        // s < m < 2^64, so s*s fits.
        s = (s * s % m + m - 2) % m;
    }
    s == 0
}

fn lucas_lehmer_big(e: u32) -> bool {
    let m = (BigUint::one() << e) - 1u32;
    let mut s = BigUint::from(4u32);
    for _ in 0..e - 2 {
        s = (&s * &s + &m - 2u32) % &m;
    }
    s.is_zero()
}

/// `(e, r, t)` with `m = e r + t`, `r >= 1`, `t >= 0` and `2^e - 1` a Mersenne prime `>= 31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MersenneTriple {
    pub e: u32,
    pub r: u32,
    pub t: u32,
}

impl MersenneTriple {
    pub fn new(e: u32, r: u32, t: u32) -> Result<Self, MersenneError> {
        if e < MIN_EXPONENT || !is_mersenne_exponent(e) {
            return Err(MersenneError::NotMersenne(e));
        }
        if r == 0 {
            return Err(MersenneError::ZeroRank);
        }
        Ok(Self { e, r, t })
    }

    /// The Mersenne prime `p = 2^e - 1`.
    pub fn p(&self) -> BigUint {
        (BigUint::one() << self.e) - 1u32
    }

    /// `m = e r + t`, so the degree is `2^m * 3`.
    pub fn m(&self) -> u32 {
        self.e * self.r + self.t
    }

    /// `(size, multiplicity)` for `k = 0..=r`: `C(r,k) 2^t1` orbits of
    /// length `3 p^k 2^(t - t1)`.
    pub fn orbit_profile(&self, t1: u32) -> Result<Vec<(BigUint, BigUint)>, MersenneError> {
        if t1 > self.t {
            return Err(MersenneError::T1OutOfRange { t1, t: self.t });
        }
        let p = self.p();
        let mut p_k = BigUint::one();
        let mut out = Vec::with_capacity(self.r as usize + 1);
        for k in 0..=self.r {
            let size = (&p_k * 3u32) << (self.t - t1);
            let mult = binom(u64::from(self.r), u64::from(k)) << t1;
            out.push((size, mult));
            p_k *= &p;
        }
        Ok(out)
    }
}

impl fmt::Display for MersenneTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.e, self.r, self.t)
    }
}

/// All admissible triples with `e r + t = m`, ordered by `e` then `r`.
pub fn enumerate_triples(m: u32) -> Result<Vec<MersenneTriple>, MersenneError> {
    if m == 0 || m > MAX_M {
        return Err(MersenneError::MOutOfRange(m));
    }
    let mut out = Vec::new();
    for e in (MIN_EXPONENT..=m).filter(|&e| is_mersenne_exponent(e)) {
        for r in 1..=m / e {
            out.push(MersenneTriple { e, r, t: m - e * r });
        }
    }
    Ok(out)
}

/// `sum_k C(r,k) 3 p^k == 3 (p+1)^r` for `p = 2^e - 1`, in exact arithmetic.
pub fn check_orbit_identity(e: u32, r: u32) -> bool {
    let p = (BigUint::one() << e) - 1u32;
    let mut lhs = BigUint::zero();
    let mut p_k = BigUint::one();
    for k in 0..=r {
        lhs += binom(u64::from(r), u64::from(k)) * 3u32 * &p_k;
        p_k *= &p;
    }
    let rhs = (p + 1u32).pow(r) * 3u32;
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(e: u32, r: u32, t: u32) -> MersenneTriple {
        MersenneTriple::new(e, r, t).unwrap()
    }

    #[test]
    fn exponents() {
        let found: Vec<u32> = (1..=64).filter(|&e| is_mersenne_exponent(e)).collect();
        assert_eq!(found, vec![2, 3, 5, 7, 13, 17, 19, 31, 61]);
        assert!(is_mersenne_exponent(89));
        assert!(is_mersenne_exponent(107));
        assert!(!is_mersenne_exponent(67));
        assert!(!is_mersenne_exponent(11));
    }

    #[test]
    fn triples_of_small_m() {
        assert_eq!(enumerate_triples(5).unwrap(), vec![t(5, 1, 0)]);
        assert_eq!(enumerate_triples(13).unwrap(), vec![t(5, 1, 8), t(5, 2, 3), t(7, 1, 6), t(13, 1, 0)]);
        assert!(enumerate_triples(4).unwrap().is_empty());
        assert_eq!(enumerate_triples(19).unwrap().len(), 8);
        assert!(enumerate_triples(0).is_err());
    }

    #[test]
    fn profiles() {
        let big = |n: u64| BigUint::from(n);
        assert_eq!(t(5, 1, 0).orbit_profile(0).unwrap(), vec![(big(3), big(1)), (big(93), big(1))]);
        assert_eq!(
            t(5, 2, 0).orbit_profile(0).unwrap(),
            vec![(big(3), big(1)), (big(93), big(2)), (big(2883), big(1))]
        );
        let prof = t(5, 1, 1).orbit_profile(1).unwrap();
        let count: BigUint = prof.iter().map(|(_, m)| m).sum();
        assert_eq!(count, big(4));
        assert!(t(5, 1, 1).orbit_profile(2).is_err());
    }

    #[test]
    fn identity() {
        assert!(check_orbit_identity(5, 1));
        assert!(check_orbit_identity(5, 3));
        assert!(check_orbit_identity(7, 1));
    }

    #[test]
    fn invalid_triples() {
        assert_eq!(MersenneTriple::new(3, 1, 0), Err(MersenneError::NotMersenne(3)));
        assert_eq!(MersenneTriple::new(11, 1, 0), Err(MersenneError::NotMersenne(11)));
        assert_eq!(MersenneTriple::new(5, 0, 0), Err(MersenneError::ZeroRank));
    }
}
