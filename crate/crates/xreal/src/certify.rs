use std::cmp::Ordering;
use std::sync::atomic::{AtomicU32, Ordering as AtomicOrdering};

use num_bigint::BigInt;

use crate::{RealExpr, XrealError};

/// Precision at which every escalation starts.
pub const START_PRECISION: u32 = 64;
/// Default upper limit for precision escalation.
pub const DEFAULT_PRECISION_CAP: u32 = 4096;

static PRECISION_CAP: AtomicU32 = AtomicU32::new(DEFAULT_PRECISION_CAP);

/// Sets the process-wide precision cap used by [`certified_floor`] and the
/// comparison helpers. Values below the start precision are raised to it.
pub fn set_precision_cap(bits: u32) {
    PRECISION_CAP.store(bits.max(START_PRECISION), AtomicOrdering::Relaxed);
}

pub fn precision_cap() -> u32 {
    PRECISION_CAP.load(AtomicOrdering::Relaxed)
}

/// Precisions tried in order: 64, 128, 256, ... up to and including `cap`.
fn schedule(cap: u32) -> impl Iterator<Item = u32> {
    let cap = cap.max(START_PRECISION);
    let mut next = Some(START_PRECISION);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur >= cap { None } else { Some((cur * 2).min(cap)) };
        Some(cur)
    })
}

/// `floor(expr)`, certified.
pub fn certified_floor(expr: &RealExpr) -> Result<BigInt, XrealError> {
    certified_floor_with_cap(expr, precision_cap())
}

pub fn certified_floor_with_cap(expr: &RealExpr, cap: u32) -> Result<BigInt, XrealError> {
    if let Some(s) = expr.surd() {
        return Ok(s.floor());
    }
    let mut last = None;
    for prec in schedule(cap) {
        match expr.eval(prec) {
            Ok(i) => {
                let (a, b) = i.floors();
                if a == b {
                    return Ok(a);
                }
                last = Some(Err(XrealError::AmbiguousFloor { expr: expr.to_string(), prec, enclosure: i.to_string() }));
            }
            Err(e @ XrealError::Domain(_)) => last = Some(Err(e)),
            Err(e) => return Err(e),
        }
    }
    last.unwrap_or_else(|| Err(XrealError::Domain("empty precision schedule".into())))
}

/// Certified ordering of two expressions. `Equal` is returned only when both
/// sides have exact closed forms that agree.
pub fn certified_cmp(lhs: &RealExpr, rhs: &RealExpr) -> Result<Ordering, XrealError> {
    certified_cmp_with_cap(lhs, rhs, precision_cap())
}

pub fn certified_cmp_with_cap(lhs: &RealExpr, rhs: &RealExpr, cap: u32) -> Result<Ordering, XrealError> {
    if let (Some(a), Some(b)) = (lhs.surd(), rhs.surd()) {
        return Ok(a.cmp_value(&b));
    }
    let diff = rhs.clone() - lhs.clone();
    let mut last = None;
    for prec in schedule(cap) {
        match diff.eval(prec) {
            Ok(i) => {
                if let Some(s) = i.sign().filter(|s| *s != Ordering::Equal) {
                    // diff = rhs - lhs > 0 means lhs < rhs.
                    return Ok(s.reverse());
                }
                last = Some(Err(XrealError::AmbiguousComparison { lhs: lhs.to_string(), rhs: rhs.to_string(), prec }));
            }
            Err(e @ XrealError::Domain(_)) => last = Some(Err(e)),
            Err(e) => return Err(e),
        }
    }
    last.unwrap_or_else(|| Err(XrealError::Domain("empty precision schedule".into())))
}

/// Certified `lhs <= rhs`.
pub fn certified_le(lhs: &RealExpr, rhs: &RealExpr) -> Result<bool, XrealError> {
    Ok(certified_cmp(lhs, rhs)? != Ordering::Greater)
}

/// Certified `lhs < rhs`.
pub fn certified_lt(lhs: &RealExpr, rhs: &RealExpr) -> Result<bool, XrealError> {
    Ok(certified_cmp(lhs, rhs)? == Ordering::Less)
}

/// Whether the decimal expansion of `expr` starts with `prefix`
/// (e.g. `"0.920581"`), i.e. `prefix <= expr < prefix + ulp`.
pub fn matches_decimal_prefix(expr: &RealExpr, prefix: &str) -> Result<bool, XrealError> {
    let (int, frac) = prefix.split_once('.').unwrap_or((prefix, ""));
    let digits = format!("{int}{frac}");
    let scaled: BigInt = digits.parse().map_err(|_| XrealError::Domain(format!("not a decimal: {prefix}")))?;
    let den = BigInt::from(10u32).pow(frac.len() as u32);
    let lo = RealExpr::ratio(scaled.clone(), den.clone());
    let hi = RealExpr::ratio(scaled + 1, den);
    Ok(certified_le(&lo, expr)? && certified_lt(expr, &hi)?)
}

/// Whether `expr` rounds to the decimal `shown` at its number of places,
/// i.e. `|expr - shown| <= ulp / 2`.
pub fn matches_rounded_decimal(expr: &RealExpr, shown: &str) -> Result<bool, XrealError> {
    let (int, frac) = shown.split_once('.').unwrap_or((shown, ""));
    let scaled: BigInt =
        format!("{int}{frac}").parse().map_err(|_| XrealError::Domain(format!("not a decimal: {shown}")))?;
    let den: BigInt = BigInt::from(10u32).pow(frac.len() as u32) * 2;
    let lo = RealExpr::ratio(&scaled * 2 - 1, den.clone());
    let hi = RealExpr::ratio(&scaled * 2 + 1, den);
    Ok(certified_le(&lo, expr)? && certified_le(expr, &hi)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ConstantId;

    fn c() -> RealExpr {
        RealExpr::constant(ConstantId::C)
    }

    #[test]
    fn schedule_doubles_to_cap() {
        assert_eq!(schedule(4096).collect::<Vec<_>>(), vec![64, 128, 256, 512, 1024, 2048, 4096]);
        assert_eq!(schedule(100).collect::<Vec<_>>(), vec![64, 100]);
        assert_eq!(schedule(10).collect::<Vec<_>>(), vec![64]);
    }

    #[test]
    fn exact_tie_resolves_without_intervals() {
        let e = c() * 8 / RealExpr::int(3).sqrt();
        assert_eq!(certified_floor_with_cap(&e, 64).unwrap(), BigInt::from(4));
        let le = certified_cmp(&e, &RealExpr::int(4)).unwrap();
        assert_eq!(le, Ordering::Equal);
    }

    #[test]
    fn near_tie_floors() {
        let e = c() * 8 / RealExpr::int(8).log2().sqrt();
        assert_eq!(certified_floor(&e).unwrap(), BigInt::from(4));
        let e = c() * 36 / RealExpr::int(36).log2().sqrt();
        assert_eq!(certified_floor(&e).unwrap(), BigInt::from(13));
        let e = RealExpr::constant(ConstantId::B) * 8 / RealExpr::int(3).sqrt();
        assert_eq!(certified_floor(&e).unwrap(), BigInt::from(3));
    }

    #[test]
    fn exact_integer_irrational_form_is_ambiguous() {
        let e = RealExpr::int(3).ln() / RealExpr::int(3).ln();
        assert!(matches!(certified_floor_with_cap(&e, 256), Err(XrealError::AmbiguousFloor { .. })));
        let same = RealExpr::Pi;
        assert!(matches!(certified_cmp_with_cap(&same, &same, 128), Err(XrealError::AmbiguousComparison { .. })));
    }

    #[test]
    fn comparisons() {
        let c1 = RealExpr::constant(ConstantId::C1);
        assert!(certified_le(&c(), &c1).unwrap());
        let b = RealExpr::constant(ConstantId::B);
        let b1 = RealExpr::constant(ConstantId::B1);
        assert!(!certified_le(&b1, &b).unwrap());
        let ws12 = RealExpr::ratio(9, 2);
        let rhs = b * 12 / RealExpr::int(12).log2().sqrt();
        assert!(certified_le(&ws12, &rhs).unwrap());
        assert!(certified_lt(&RealExpr::int(1), &RealExpr::int(2)).unwrap());
        assert!(!certified_lt(&RealExpr::int(2), &RealExpr::int(2)).unwrap());
    }

    #[test]
    fn decimal_prefixes() {
        let c1 = RealExpr::constant(ConstantId::C1);
        assert!(matches_decimal_prefix(&c1, "0.92058").unwrap());
        assert!(matches_decimal_prefix(&c1, "0.920583").unwrap());
        assert!(!matches_decimal_prefix(&c1, "0.920581").unwrap());
        assert!(matches_rounded_decimal(&c1, "0.920584").unwrap());
        assert!(!matches_rounded_decimal(&c1, "0.920581").unwrap());
        let b0 = RealExpr::constant(ConstantId::B0);
        assert!(matches_rounded_decimal(&b0, "3.62134").unwrap());
    }
}
