//! Elementary functions on intervals: ln, exp, and the constants ln 2 and pi.
//!
//! Each function works internally with `GUARD` extra bits and rounds the
//! result outward to the precision of its argument. Series tails are bounded
//! explicitly and added to the enclosure.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Interval, XrealError};

const GUARD: u32 = 24;

fn cache() -> &'static Mutex<HashMap<(&'static str, u32), Interval>> {
    static CACHE: OnceLock<Mutex<HashMap<(&'static str, u32), Interval>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached(key: &'static str, prec: u32, compute: impl FnOnce(u32) -> Interval) -> Interval {
    if let Some(v) = cache().lock().expect("constant cache poisoned").get(&(key, prec)) {
        return v.clone();
    }
    let v = compute(prec);
    cache().lock().expect("constant cache poisoned").insert((key, prec), v.clone());
    v
}

/// `sum_{k>=0} z^(2k+1) / (2k+1)` for a small interval `z` (|z| <= 1/2).
fn atanh_series(z: &Interval) -> Interval {
    let prec = z.prec();
    let eps = BigInt::one();
    let z2 = z.mul(z);
    let mut term = z.clone();
    let mut sum = Interval::from_int(0, prec);
    let mut k: u64 = 0;
    loop {
        sum = sum.add(&term.div_int(&BigInt::from(2 * k + 1)));
        term = term.mul(&z2);
        k += 1;
        if term.mag_scaled() <= eps {
            break;
        }
    }
    // The remaining terms are bounded by |term| / (1 - z^2) <= 2 |term|.
    let tail = term.mag_scaled() * 2 + 1;
    sum.widen(&tail)
}

/// Enclosure of ln 2 at precision `prec`.
pub fn ln2(prec: u32) -> Interval {
    cached("ln2", prec, |prec| {
        let w = prec + GUARD;
        let third = Interval::from_int(1, w).div_int(&BigInt::from(3));
        atanh_series(&third).mul_int(&BigInt::from(2)).with_prec(prec)
    })
}

/// `sum_{k>=0} (-1)^k / ((2k+1) q^(2k+1))` for an integer q >= 2.
fn atan_inverse(q: u64, prec: u32) -> Interval {
    let q = BigInt::from(q);
    let q2 = &q * &q;
    let mut power = Interval::from_int(1, prec).div_int(&q);
    let mut sum = Interval::from_int(0, prec);
    let mut k: u64 = 0;
    while power.lo_scaled() > &BigInt::zero() {
        let term = power.div_int(&BigInt::from(2 * k + 1));
        sum = if k % 2 == 0 { sum.add(&term) } else { sum.sub(&term) };
        power = power.div_int(&q2);
        k += 1;
    }
    // Alternating series with decreasing terms: the tail is below the next
    // term, whose upper end has dropped to at most one unit.
    sum.widen(&BigInt::from(2))
}

/// Enclosure of pi at precision `prec`, from Machin's formula.
pub fn pi(prec: u32) -> Interval {
    cached("pi", prec, |prec| {
        let w = prec + GUARD;
        let a = atan_inverse(5, w).mul_int(&BigInt::from(16));
        let b = atan_inverse(239, w).mul_int(&BigInt::from(4));
        a.sub(&b).with_prec(prec)
    })
}

/// Enclosure of ln x for a single positive dyadic point `x = m * 2^-w`.
fn ln_point(m: &BigInt, w: u32) -> Interval {
    let work = w + GUARD;
    let bits = m.bits();
    // x = y * 2^e with y = m / 2^(bits-1) in [1, 2).
    let mut e = bits as i64 - 1 - i64::from(w);
    let top = BigInt::one() << (bits - 1);
    let (num, den) = {
        // Move y into [1/sqrt 2, sqrt 2): if y^2 >= 2, use y/2 instead.
        let two_top_sq = (&top * &top) << 1;
        if m * m >= two_top_sq {
            e += 1;
            (m - (&top << 1), m + (&top << 1))
        } else {
            (m - &top, m + &top)
        }
    };
    let z = Interval::from_int(num, work).div_int(&den);
    let lny = atanh_series(&z).mul_int(&BigInt::from(2));
    let result = lny.add(&ln2(work).mul_int(&BigInt::from(e)));
    result.with_prec(w)
}

/// Natural logarithm of a positive interval.
pub fn ln(x: &Interval) -> Result<Interval, XrealError> {
    if !x.is_positive() {
        return Err(XrealError::Domain("logarithm of an interval not bounded away from zero".into()));
    }
    let w = x.prec();
    let lo = ln_point(x.lo_scaled(), w);
    if x.is_point() {
        return Ok(lo);
    }
    let hi = ln_point(x.hi_scaled(), w);
    Ok(lo.hull(&hi))
}

/// Enclosure of exp of a single dyadic point `x` (a degenerate interval).
fn exp_point(x: &Interval) -> Interval {
    const HALVINGS: u32 = 8;
    let w = x.prec();
    let work = w + GUARD + HALVINGS;
    let xw = x.with_prec(work);
    let l2 = ln2(work);
    // k approximates x / ln 2; any integer keeps the result exact up to rounding.
    let k = xw.lo_scaled() / l2.lo_scaled();
    let r = xw.sub(&l2.mul_int(&k)).shift(-i64::from(HALVINGS));
    let one = Interval::from_int(1, work);
    let mut sum = one.clone();
    let mut term = one;
    let mut i: u64 = 1;
    loop {
        term = term.mul(&r).div_int(&BigInt::from(i));
        sum = sum.add(&term);
        i += 1;
        if term.mag_scaled() <= BigInt::one() {
            break;
        }
    }
    // |r| < 1, so the tail is below twice the last term.
    let mut e = sum.widen(&(term.mag_scaled() * 2 + 1));
    for _ in 0..HALVINGS {
        e = e.mul(&e);
    }
    let neg = k.is_negative();
    let k: i64 = k.try_into().unwrap_or(if neg { i64::MIN / 2 } else { i64::MAX / 2 });
    e.shift(k).with_prec(w)
}

/// Exponential of an interval.
pub fn exp(x: &Interval) -> Interval {
    if x.is_point() {
        return exp_point(x);
    }
    let lo = exp_point(&x.lower_point());
    let hi = exp_point(&x.upper_point());
    lo.hull(&hi)
}
