//! The family of 2-groups of degree `4^k` whose generator count
//! `C(2k-1, k-1) + 2k - 1` approaches `(b/2) d / sqrt(log d)`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::Serialize;
use transgen_numth::binom;
use transgen_xreal::{certified_floor, certified_lt, ConstantId, RealExpr};

use crate::{SweepError, SweepReport};

/// One member of the family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Example62Row {
    pub k: u64,
    /// `4^k`.
    #[serde(serialize_with = "crate::report::as_decimal")]
    pub degree: BigUint,
    #[serde(serialize_with = "crate::report::as_decimal")]
    pub generators: BigUint,
    /// `floor(c 4^k / sqrt(2k))`.
    #[serde(serialize_with = "crate::report::as_decimal")]
    pub generic: BigUint,
}

pub fn generators(k: u64) -> BigUint {
    binom(2 * k - 1, k - 1) + BigUint::from(2 * k - 1)
}

/// `2k C(2k,k)^2 / 16^k`, the square of `sqrt(2k) C(2k,k) / 4^k`.
fn ratio_squared(k: u64) -> BigRational {
    let c = BigInt::from(binom(2 * k, k));
    BigRational::new(BigInt::from(2 * k) * &c * &c, BigInt::from(1u8) << (4 * k))
}

/// For `2 <= k <= k_max`: the generator count agrees with `C(2k,k)/2 + 2k - 1`
/// and stays within the generic bound, and `sqrt(2k) C(2k,k) / 4^k` is
/// strictly increasing and below `b`.
pub fn check_example62(k_max: u64) -> Result<(SweepReport, Vec<Example62Row>), SweepError> {
    if k_max < 2 {
        return Err(SweepError::OutOfRange(format!("k_max = {k_max} is below 2")));
    }
    let mut report = SweepReport::new(
        "example62",
        "C(2k-1,k-1)+2k-1; sqrt(2k)*C(2k,k)/4^k",
        "floor(c*4^k/sqrt(2k)); increasing and < b",
    )
    .with_threshold(2);
    let two_over_pi = RealExpr::int(2) / RealExpr::Pi;
    let mut rows = Vec::new();
    let mut outcomes = Vec::new();
    let mut previous = ratio_squared(1);
    for k in 2..=k_max {
        let g = generators(k);
        let alternative = binom(2 * k, k) / 2u8 + BigUint::from(2 * k - 1);
        let degree = BigUint::from(1u8) << (2 * k);
        let generic = certified_floor(
            &(RealExpr::constant(ConstantId::C) * RealExpr::from(degree.clone()) / RealExpr::from(2 * k).sqrt()),
        )?;
        let generic = generic.to_biguint().expect("positive bound");
        let square = ratio_squared(k);
        let increasing = square > previous;
        let below_b = certified_lt(&RealExpr::from(square.clone()), &two_over_pi)?;
        outcomes.push((k, g == alternative && g <= generic && increasing && below_b));
        rows.push(Example62Row { k, degree, generators: g, generic });
        previous = square;
    }
    report.record(outcomes);
    Ok((report, rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_members() {
        assert_eq!(generators(2), BigUint::from(6u8));
        assert_eq!(generators(3), BigUint::from(15u8));
        let (report, rows) = check_example62(10).unwrap();
        assert!(report.is_verified());
        assert_eq!(rows[0].degree, BigUint::from(16u8));
        assert_eq!(rows[1].degree, BigUint::from(64u8));
        // floor(c * 16 / 2) = floor(6.928...) = 6: k = 2 is tight.
        assert_eq!(rows[0].generic, BigUint::from(6u8));
    }

    #[test]
    fn ratio_increases_from_two_to_three() {
        assert!(ratio_squared(3) > ratio_squared(2));
        // 2*2*36/256 = 9/16 and 2*3*400/4096 = 75/128.
        assert_eq!(ratio_squared(2), BigRational::new(9.into(), 16.into()));
        assert_eq!(ratio_squared(3), BigRational::new(75.into(), 128.into()));
    }
}
