//! Estimates for primitive groups of degree `m`.

use serde::Serialize;
use transgen_xreal::{certified_floor, ConstantId, RealExpr};

use crate::BoundsError;

/// `floor((1 + c0) log m - (1/3) log 24)`, an upper bound for the number of
/// abelian composition factors of a primitive group of degree `m`.
pub fn pyber_ab_bound(m: u64) -> Result<u64, BoundsError> {
    if m < 2 {
        return Err(BoundsError::Domain("degree m must be at least 2".into()));
    }
    let expr = (RealExpr::from(1) + RealExpr::constant(ConstantId::C0)) * RealExpr::from(m).log2()
        - RealExpr::ratio(1, 3) * RealExpr::from(24).log2();
    let floor = certified_floor(&expr)?;
    u64::try_from(floor).map_err(|_| BoundsError::Domain(format!("negative abelian length bound at m = {m}")))
}

/// `floor(log m)`, bounding the nonabelian composition factors of a
/// primitive group of degree `m`. The source statement writes `log n`;
/// the degree of the primitive group is `m`, so `log m` is used.
pub fn pyber_nab_bound(m: u64) -> Result<u64, BoundsError> {
    if m < 2 {
        return Err(BoundsError::Domain("degree m must be at least 2".into()));
    }
    Ok(u64::from(m.ilog2()))
}

/// `floor(log m)` generators for subnormal subgroups of a primitive group
/// of degree `m`, with the single exception `S_3` at `m = 3`, which needs 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PrimitiveGenerators {
    pub value: u64,
    pub s3_exception: bool,
}

impl PrimitiveGenerators {
    /// The bound including the exception.
    pub fn with_exception(&self) -> u64 {
        if self.s3_exception {
            self.value.max(2)
        } else {
            self.value
        }
    }
}

pub fn holt_bound(m: u64) -> Result<PrimitiveGenerators, BoundsError> {
    if m < 2 {
        return Err(BoundsError::Domain("degree m must be at least 2".into()));
    }
    Ok(PrimitiveGenerators { value: u64::from(m.ilog2()), s3_exception: m == 3 })
}

/// `(e b1 + c1) sqrt(z + w) / (2^z sqrt(w))`, decreasing in `w` for fixed `(e, z)`.
pub fn f_function(e: RealExpr, z: RealExpr, w: RealExpr) -> RealExpr {
    (e * RealExpr::constant(ConstantId::B1) + RealExpr::constant(ConstantId::C1)) * (z.clone() + w.clone()).sqrt()
        / (z.pow2() * w.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use transgen_xreal::certified_lt;

    #[test]
    fn abelian_length() {
        assert_eq!(pyber_ab_bound(2).unwrap(), 1);
        assert_eq!(pyber_ab_bound(4).unwrap(), 4);
        assert!(pyber_ab_bound(480).unwrap() >= 1);
        assert!(pyber_ab_bound(1).is_err());
    }

    #[test]
    fn primitive_generators() {
        assert_eq!(holt_bound(8).unwrap(), PrimitiveGenerators { value: 3, s3_exception: false });
        assert_eq!(holt_bound(3).unwrap(), PrimitiveGenerators { value: 1, s3_exception: true });
        assert_eq!(holt_bound(3).unwrap().with_exception(), 2);
        assert_eq!(holt_bound(24).unwrap().value, 4);
        assert_eq!(pyber_nab_bound(24).unwrap(), 4);
    }

    #[test]
    fn f_decreases_in_w() {
        let (e, z) = (RealExpr::from(7), RealExpr::from(10).log2());
        let w = RealExpr::from(1261).log2();
        let f1 = f_function(e.clone(), z.clone(), w.clone());
        let f4 = f_function(e, z, w * 4);
        assert!(certified_lt(&f4, &f1).unwrap());
    }

    #[test]
    fn f_without_elementary_part() {
        let zero = f_function(RealExpr::from(0), RealExpr::from(1), RealExpr::from(1));
        let direct = RealExpr::constant(ConstantId::C1) * RealExpr::from(2).sqrt() / RealExpr::from(2);
        let scale = RealExpr::from(1_000_000u64);
        assert_eq!(certified_floor(&(zero * scale.clone())).unwrap(), certified_floor(&(direct * scale)).unwrap());
    }
}
