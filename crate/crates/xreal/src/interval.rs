use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::XrealError;

/// Closed interval `[lo, hi] * 2^-prec` with integer endpoints.
///
/// All arithmetic rounds outward, so the result encloses every value obtained
/// by applying the exact operation to points of the operands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: BigInt,
    hi: BigInt,
    prec: u32,
}

fn floor_shr(x: &BigInt, k: u32) -> BigInt {
    // Arithmetic shift on BigInt rounds toward negative infinity.
    x >> k
}

fn ceil_shr(x: &BigInt, k: u32) -> BigInt {
    -((-x) >> k)
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

impl Interval {
    pub fn from_parts(lo: BigInt, hi: BigInt, prec: u32) -> Self {
        debug_assert!(lo <= hi);
        Self { lo, hi, prec }
    }

    pub fn from_int(n: impl Into<BigInt>, prec: u32) -> Self {
        let v = n.into() << prec;
        Self { lo: v.clone(), hi: v, prec }
    }

    pub fn from_rational(r: &BigRational, prec: u32) -> Self {
        let num = r.numer() << prec;
        let lo = num.div_floor(r.denom());
        let hi = ceil_div(&num, r.denom());
        Self { lo, hi, prec }
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    /// Lower endpoint scaled by `2^prec`.
    pub fn lo_scaled(&self) -> &BigInt {
        &self.lo
    }

    /// Upper endpoint scaled by `2^prec`.
    pub fn hi_scaled(&self) -> &BigInt {
        &self.hi
    }

    pub fn lo(&self) -> BigRational {
        BigRational::new(self.lo.clone(), BigInt::one() << self.prec)
    }

    pub fn hi(&self) -> BigRational {
        BigRational::new(self.hi.clone(), BigInt::one() << self.prec)
    }

    pub fn width(&self) -> BigRational {
        BigRational::new(&self.hi - &self.lo, BigInt::one() << self.prec)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, r: &BigRational) -> bool {
        &self.lo() <= r && r <= &self.hi()
    }

    /// True when `other` lies inside `self`.
    pub fn encloses(&self, other: &Interval) -> bool {
        self.lo() <= other.lo() && other.hi() <= self.hi()
    }

    /// `(floor(lo), floor(hi))`.
    pub fn floors(&self) -> (BigInt, BigInt) {
        (floor_shr(&self.lo, self.prec), floor_shr(&self.hi, self.prec))
    }

    pub fn is_positive(&self) -> bool {
        self.lo.sign() == Sign::Plus
    }

    pub fn is_negative(&self) -> bool {
        self.hi.sign() == Sign::Minus
    }

    /// Sign of every point of the interval, if it is the same for all.
    pub fn sign(&self) -> Option<Ordering> {
        if self.is_positive() {
            Some(Ordering::Greater)
        } else if self.is_negative() {
            Some(Ordering::Less)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    /// Re-expresses the interval at precision `prec`, rounding outward.
    pub fn with_prec(&self, prec: u32) -> Self {
        match prec.cmp(&self.prec) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => {
                let k = prec - self.prec;
                Self { lo: &self.lo << k, hi: &self.hi << k, prec }
            }
            Ordering::Less => {
                let k = self.prec - prec;
                Self { lo: floor_shr(&self.lo, k), hi: ceil_shr(&self.hi, k), prec }
            }
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.prec, other.prec, "interval precisions differ");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        Self { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi, prec: self.prec }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        Self { lo: &self.lo - &other.hi, hi: &self.hi - &other.lo, prec: self.prec }
    }

    pub fn neg(&self) -> Self {
        Self { lo: -&self.hi, hi: -&self.lo, prec: self.prec }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let (lo, hi) = if self.lo.sign() != Sign::Minus && other.lo.sign() != Sign::Minus {
            (&self.lo * &other.lo, &self.hi * &other.hi)
        } else {
            let c = [&self.lo * &other.lo, &self.lo * &other.hi, &self.hi * &other.lo, &self.hi * &other.hi];
            let lo = c.iter().min().cloned().unwrap_or_default();
            let hi = c.iter().max().cloned().unwrap_or_default();
            (lo, hi)
        };
        Self { lo: floor_shr(&lo, self.prec), hi: ceil_shr(&hi, self.prec), prec: self.prec }
    }

    /// Multiplication by an exact integer.
    pub fn mul_int(&self, k: &BigInt) -> Self {
        let (a, b) = (&self.lo * k, &self.hi * k);
        if k.is_negative() {
            Self { lo: b, hi: a, prec: self.prec }
        } else {
            Self { lo: a, hi: b, prec: self.prec }
        }
    }

    /// Division by a nonzero exact integer.
    pub fn div_int(&self, k: &BigInt) -> Self {
        assert!(!k.is_zero(), "division by zero");
        let (a, b) = if k.is_negative() { (&self.hi, &self.lo) } else { (&self.lo, &self.hi) };
        Self { lo: a.div_floor(k), hi: ceil_div(b, k), prec: self.prec }
    }

    pub fn div(&self, other: &Self) -> Result<Self, XrealError> {
        self.check(other);
        if other.sign().is_none() || other.sign() == Some(Ordering::Equal) {
            return Err(XrealError::Domain("division by an interval containing zero".into()));
        }
        let nums = [&self.lo << self.prec, &self.hi << self.prec];
        let dens = [&other.lo, &other.hi];
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        for n in &nums {
            for d in dens {
                let f = n.div_floor(d);
                let c = ceil_div(n, d);
                lo = Some(lo.map_or(f.clone(), |x| x.min(f)));
                hi = Some(hi.map_or(c.clone(), |x| x.max(c)));
            }
        }
        Ok(Self { lo: lo.unwrap_or_default(), hi: hi.unwrap_or_default(), prec: self.prec })
    }

    pub fn sqrt(&self) -> Result<Self, XrealError> {
        if self.lo.is_negative() {
            return Err(XrealError::Domain("square root of an interval reaching below zero".into()));
        }
        let lo_s = &self.lo << self.prec;
        let hi_s = &self.hi << self.prec;
        let lo = lo_s.sqrt();
        let r = hi_s.sqrt();
        let hi = if &r * &r == hi_s { r } else { r + 1 };
        Ok(Self { lo, hi, prec: self.prec })
    }

    /// Multiplies by `2^k` (k may be negative), rounding outward.
    pub fn shift(&self, k: i64) -> Self {
        if k >= 0 {
            let k = k as u32;
            Self { lo: &self.lo << k, hi: &self.hi << k, prec: self.prec }
        } else {
            let k = (-k) as u32;
            Self { lo: floor_shr(&self.lo, k), hi: ceil_shr(&self.hi, k), prec: self.prec }
        }
    }

    /// Interval hull of `self` and `other`.
    pub fn hull(&self, other: &Self) -> Self {
        self.check(other);
        Self { lo: self.lo.clone().min(other.lo.clone()), hi: self.hi.clone().max(other.hi.clone()), prec: self.prec }
    }

    /// Widens both ends by `eps * 2^-prec`.
    pub fn widen(&self, eps: &BigInt) -> Self {
        Self { lo: &self.lo - eps, hi: &self.hi + eps, prec: self.prec }
    }

    /// Largest absolute value of a point, scaled by `2^prec`.
    pub fn mag_scaled(&self) -> BigInt {
        self.lo.abs().max(self.hi.abs())
    }

    /// The lower endpoint as a degenerate interval.
    pub fn lower_point(&self) -> Self {
        Self { lo: self.lo.clone(), hi: self.lo.clone(), prec: self.prec }
    }

    /// The upper endpoint as a degenerate interval.
    pub fn upper_point(&self) -> Self {
        Self { lo: self.hi.clone(), hi: self.hi.clone(), prec: self.prec }
    }

    /// Decimal truncations `(down, up)` of the endpoints to `digits` places.
    pub fn decimal_bounds(&self, digits: u32) -> (String, String) {
        let scale = BigInt::from(10u32).pow(digits);
        let one = BigInt::one() << self.prec;
        let down = (&self.lo * &scale).div_floor(&one);
        let up = ceil_div(&(&self.hi * &scale), &one);
        (fixed_decimal(&down, digits), fixed_decimal(&up, digits))
    }
}

fn fixed_decimal(scaled: &BigInt, digits: u32) -> String {
    let neg = scaled.is_negative();
    let s = scaled.abs().to_string();
    let d = digits as usize;
    let s = if s.len() <= d { format!("{}{}", "0".repeat(d + 1 - s.len()), s) } else { s };
    let (int, frac) = s.split_at(s.len() - d);
    let sign = if neg { "-" } else { "" };
    if d == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (lo, hi) = self.decimal_bounds(12);
        write!(f, "[{lo}, {hi}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rational_enclosure() {
        let i = Interval::from_rational(&r(1, 3), 64);
        assert!(i.contains(&r(1, 3)));
        assert_eq!(i.hi_scaled() - i.lo_scaled(), BigInt::one());
        let exact = Interval::from_rational(&r(3, 4), 8);
        assert!(exact.is_point());
    }

    #[test]
    fn arithmetic_encloses() {
        let a = Interval::from_rational(&r(-2, 3), 40);
        let b = Interval::from_rational(&r(5, 7), 40);
        assert!(a.mul(&b).contains(&r(-10, 21)));
        assert!(a.div(&b).unwrap().contains(&r(-14, 15)));
        assert!(a.sub(&b).contains(&r(-29, 21)));
        assert!(b.sqrt().unwrap().contains_sqrt_of(&r(5, 7)));
        assert!(a.sqrt().is_err());
        let z = Interval::from_rational(&r(0, 1), 40).widen(&BigInt::one());
        assert!(a.div(&z).is_err());
    }

    #[test]
    fn decimal_rendering() {
        let i = Interval::from_rational(&r(-1, 8), 10);
        assert_eq!(i.decimal_bounds(3), ("-0.125".to_string(), "-0.125".to_string()));
        let t = Interval::from_rational(&r(7, 3), 64);
        assert_eq!(t.decimal_bounds(2), ("2.33".to_string(), "2.34".to_string()));
    }

    impl Interval {
        fn contains_sqrt_of(&self, x: &BigRational) -> bool {
            let lo = self.lo();
            let hi = self.hi();
            &(&lo * &lo) <= x && x <= &(&hi * &hi)
        }
    }
}
