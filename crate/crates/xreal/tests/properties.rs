use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use transgen_xreal::{certified_floor, certified_le, ConstantId, RealExpr, XrealError};

fn leaf() -> impl Strategy<Value = RealExpr> {
    prop_oneof![
        (1i64..1000).prop_map(RealExpr::int),
        (-500i64..500, 1i64..97).prop_map(|(n, d)| RealExpr::ratio(n, d)),
        prop::sample::select(ConstantId::ALL.to_vec()).prop_map(RealExpr::constant),
        Just(RealExpr::Pi),
    ]
}

fn expr() -> impl Strategy<Value = RealExpr> {
    leaf().prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a + b),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a - b),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a * b),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a / b),
            inner.clone().prop_map(RealExpr::sqrt),
            inner.clone().prop_map(RealExpr::log2),
            inner.clone().prop_map(RealExpr::ln),
            leaf().prop_map(|a| (a / 64).pow2()),
            (inner, 2u64..12).prop_map(|(a, p)| a.log_base(p)),
        ]
    })
}

fn rational_expr() -> impl Strategy<Value = RealExpr> {
    let leaf = (-2000i64..2000, 1i64..200).prop_map(|(n, d)| RealExpr::ratio(n, d));
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a + b),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a - b),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a * b),
            (inner.clone(), inner).prop_map(|(a, b)| a / (b.clone() * b + 1)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn refinement_is_nested(e in expr(), p in 64u32..200) {
        let coarse = e.eval(p);
        let fine = e.eval(4 * p);
        match (coarse, fine) {
            (Ok(c), Ok(f)) => {
                prop_assert!(c.encloses(&f), "{} at {}: {} vs {}", e, p, c, f);
                prop_assert!(f.width() <= c.width());
            }
            (Err(XrealError::Domain(_)), _) => {}
            (Ok(c), Err(err)) => prop_assert!(false, "{e}: coarse {c} but fine failed: {err}"),
            (Err(err), _) => prop_assert!(false, "{e}: {err}"),
        }
    }

    #[test]
    fn floor_matches_rational_floor(e in rational_expr()) {
        let exact: BigRational = e.exact().expect("rational expression");
        prop_assert_eq!(certified_floor(&e).unwrap(), exact.floor().to_integer());
    }

    #[test]
    fn interval_floor_matches_rational_floor(n in 1i64..100_000, d in 1i64..1000) {
        // Force the interval path by hiding the rational behind exp(ln(.)).
        let hidden = RealExpr::ratio(n, d).ln().pow2_of_ln();
        let direct = BigRational::new(BigInt::from(n), BigInt::from(d)).floor().to_integer();
        match certified_floor(&hidden) {
            Ok(f) => prop_assert_eq!(f, direct),
            Err(XrealError::AmbiguousFloor { .. }) => prop_assert!(n % d == 0),
            Err(err) => prop_assert!(false, "{err}"),
        }
    }

    #[test]
    fn comparison_agrees_with_order(a in -1000i64..1000, b in -1000i64..1000) {
        let x = RealExpr::int(a) + RealExpr::Pi;
        let y = RealExpr::int(b) + RealExpr::Pi;
        match certified_le(&x, &y) {
            Ok(le) => prop_assert_eq!(le, a < b),
            Err(XrealError::AmbiguousComparison { .. }) => prop_assert_eq!(a, b),
            Err(err) => prop_assert!(false, "{err}"),
        }
    }
}

trait ExpOfLn {
    fn pow2_of_ln(self) -> RealExpr;
}

impl ExpOfLn for RealExpr {
    /// `exp(x) = 2^(x / ln 2)`.
    fn pow2_of_ln(self) -> RealExpr {
        (self / RealExpr::int(2).ln()).pow2()
    }
}
