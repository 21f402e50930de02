//! Generation bounds for submodules of induced modules: `E(n,p)`,
//! `E_sol(n,p)` and the case analysis they summarise.

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use transgen_numth::{factorize, is_prime, Factorization, Rational};
use transgen_xreal::{certified_floor, ConstantId, RealExpr};

use crate::value::{Amount, BoundValue, Rule};
use crate::BoundsError;

fn check_prime(p: u64) -> Result<(), BoundsError> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(BoundsError::NotPrime(p))
    }
}

fn check_degree(n: &Factorization) -> Result<(), BoundsError> {
    if n.is_one() {
        return Err(BoundsError::Domain("degree n must be at least 2".into()));
    }
    Ok(())
}

fn b() -> RealExpr {
    RealExpr::constant(ConstantId::B)
}

fn rational(n: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from(n.clone()))
}

/// `floor(b n / sqrt((p-1) log_p n_p))`, or `+inf` when `n_p = 1`.
fn e_first_operand(n: &Factorization, p: u64) -> Result<Amount, BoundsError> {
    let j = n.exponent_of(p);
    if j == 0 {
        return Ok(Amount::Infinite);
    }
    let expr = b() * n.value() / RealExpr::from((p - 1) * u64::from(j)).sqrt();
    Ok(Amount::int(certified_floor(&expr)?))
}

/// `E(n,p) = min{ floor(b n / sqrt((p-1) log_p n_p)), n / lpp(n / n_p) }`.
pub fn e_bound(n: u64, p: u64) -> Result<BoundValue, BoundsError> {
    e_bound_factored(&factorize(n)?, p)
}

/// [`e_bound`] for a degree given by its factorization (degrees beyond `u64`).
pub fn e_bound_factored(n: &Factorization, p: u64) -> Result<BoundValue, BoundsError> {
    check_prime(p)?;
    check_degree(n)?;
    let first = e_first_operand(n, p)?;
    let second = Amount::Finite(rational(&n.value()) / rational(&n.without(p).lpp()));
    let detail = format!("E({n},{p}) = min{{{first}, {second}}}");
    Ok(BoundValue::new(first.min(second), Rule::InducedModule, detail))
}

/// `E_sol(n,p) = min{ws(n), n_p}`.
pub fn e_sol_bound(n: u64, p: u64) -> Result<BoundValue, BoundsError> {
    e_sol_bound_factored(&factorize(n)?, p)
}

/// [`e_sol_bound`] for a degree given by its factorization.
pub fn e_sol_bound_factored(n: &Factorization, p: u64) -> Result<BoundValue, BoundsError> {
    check_prime(p)?;
    check_degree(n)?;
    let n_p = n.p_part(p);
    if n_p.is_one() {
        // ws(n) >= 1 always, so the minimum is n_p = 1 without expanding the
        // (possibly enormous) central binomial coefficient.
        let detail = format!("E_sol({n},{p}) = n_p = 1 <= ws(n)");
        return Ok(BoundValue::new(1u64, Rule::InducedModuleSoluble, detail));
    }
    let ws = Amount::Finite(n.ws()?);
    let part = Amount::Finite(rational(&n_p));
    let detail = format!("E_sol({n},{p}) = min{{ws = {ws}, n_p = {part}}}");
    Ok(BoundValue::new(ws.min(part), Rule::InducedModuleSoluble, detail))
}

/// Which of the induced-module estimates to apply, with its parameters.
/// Orbit counts `chi`, `chi1` may be `+inf`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InducedModuleCase {
    /// `min{a, chi1} n_p`, for soluble groups.
    Soluble { a: u64, chi1: Amount },
    /// `a * sum E_sol(t_i, p)` over the orbit sizes `t_i` of a soluble subgroup.
    SolubleOrbits { a: u64, orbit_sizes: Vec<u64> },
    /// `min{a, chi1} n / n_r` for a prime `r != p`.
    CoprimeSylow { a: u64, chi1: Amount, r: u64 },
    /// `chi * floor(b n / sqrt(log_p n_p))`, needs `n_p > 1`.
    CoreOrbits { chi: Amount },
    /// `a * E(n,p)`.
    Dimension { a: u64 },
}

/// Bound on the number of generators of a submodule of a module of
/// dimension `a` over `F_p`, induced from a subgroup of index `n`.
pub fn induced_module_bound(case: &InducedModuleCase, n: u64, p: u64) -> Result<BoundValue, BoundsError> {
    check_prime(p)?;
    let f = factorize(n)?;
    check_degree(&f)?;
    let n_big = f.value();
    Ok(match case {
        InducedModuleCase::Soluble { a, chi1 } => {
            let k = Amount::from(*a).min(chi1.clone());
            let value = k.mul(&Amount::Finite(rational(&f.p_part(p))));
            BoundValue::new(value, Rule::SolubleOrbitCount, format!("min{{{a}, {chi1}}} * {n}_{p}"))
        }
        InducedModuleCase::SolubleOrbits { a, orbit_sizes } => {
            if orbit_sizes.iter().sum::<u64>() != n || orbit_sizes.contains(&0) {
                return Err(BoundsError::Domain(format!("orbit sizes {orbit_sizes:?} do not partition {n}")));
            }
            let mut total = Amount::zero();
            for &t in orbit_sizes {
                // An orbit of size 1 contributes a single generator.
                let term = if t == 1 { Amount::from(1) } else { e_sol_bound(t, p)?.value };
                total = total.add(&term);
            }
            let value = Amount::from(*a).mul(&total);
            BoundValue::new(value, Rule::SolubleOrbitSum, format!("{a} * sum E_sol(t_i,{p}) over {orbit_sizes:?}"))
        }
        InducedModuleCase::CoprimeSylow { a, chi1, r } => {
            check_prime(*r)?;
            if *r == p {
                return Err(BoundsError::Domain(format!("r = {r} must differ from p")));
            }
            let k = Amount::from(*a).min(chi1.clone());
            let value = k.mul(&Amount::Finite(rational(&n_big) / rational(&f.p_part(*r))));
            BoundValue::new(value, Rule::CoprimeSylow, format!("min{{{a}, {chi1}}} * {n} / {n}_{r}"))
        }
        InducedModuleCase::CoreOrbits { chi } => {
            let j = f.exponent_of(p);
            if j == 0 {
                return Err(BoundsError::Domain(format!("{n} has trivial {p}-part")));
            }
            let expr = b() * n_big / RealExpr::from(u64::from(j)).sqrt();
            let floor = Amount::int(certified_floor(&expr)?);
            BoundValue::new(chi.mul(&floor), Rule::CoreOrbitCount, format!("{chi} * floor(b {n} / sqrt({j}))"))
        }
        InducedModuleCase::Dimension { a } => {
            e_bound(n, p)?.scaled(&Amount::from(*a)).noted(Rule::ModuleDimension, format!("{a} * E({n},{p})"))
        }
    })
}

/// Threshold where the closed forms in `n` switch from the logarithmic to
/// the square-root-logarithmic estimate.
pub const SPLIT_THRESHOLD: u64 = 1261;

/// `a E(n,p)` bounded in terms of `n` alone: `floor(2 a n / (c' log n))`
/// for `n <= 1260` and `floor(a b1 n / sqrt(log n))` from 1261 on.
pub fn split_bound(n: u64, a: u64) -> Result<BoundValue, BoundsError> {
    if n < 2 {
        return Err(BoundsError::Domain("degree n must be at least 2".into()));
    }
    let log_n = RealExpr::from(n).log2();
    let (expr, detail) = if n < SPLIT_THRESHOLD {
        (
            RealExpr::from(2 * a) * n / (RealExpr::constant(ConstantId::CPrime) * log_n),
            format!("floor(2*{a}*{n} / (c' log {n}))"),
        )
    } else {
        (
            RealExpr::from(a) * RealExpr::constant(ConstantId::B1) * n / log_n.sqrt(),
            format!("floor({a} b1 {n} / sqrt(log {n}))"),
        )
    };
    Ok(BoundValue::new(Amount::int(certified_floor(&expr)?), Rule::PrimePartSplit, detail))
}

/// The two estimates behind [`split_bound`], chosen by the size of `n_p`:
/// `a floor(b1 n / sqrt(log n))` if `n_p >= sqrt(n)`, else `floor(2 a n / (c' log n))`.
pub fn prime_part_bound(n: u64, p: u64, a: u64) -> Result<BoundValue, BoundsError> {
    check_prime(p)?;
    let f = factorize(n)?;
    check_degree(&f)?;
    let n_p = f.p_part(p);
    let log_n = RealExpr::from(n).log2();
    if &n_p * &n_p >= BigUint::from(n) {
        let expr = RealExpr::constant(ConstantId::B1) * n / log_n.sqrt();
        let value = Amount::int(certified_floor(&expr)? * BigInt::from(a));
        Ok(BoundValue::new(value, Rule::PrimePartSplit, format!("{a} floor(b1 {n} / sqrt(log {n})), n_p >= sqrt(n)")))
    } else {
        let expr = RealExpr::from(2 * a) * n / (RealExpr::constant(ConstantId::CPrime) * log_n);
        let value = Amount::int(certified_floor(&expr)?);
        Ok(BoundValue::new(value, Rule::PrimePartSplit, format!("floor(2*{a}*{n} / (c' log {n})), n_p < sqrt(n)")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: &BoundValue) -> i64 {
        v.floor().unwrap().try_into().unwrap()
    }

    #[test]
    fn e_values() {
        assert_eq!(int(&e_bound(8, 2).unwrap()), 3);
        assert_eq!(int(&e_bound(12, 2).unwrap()), 4);
        assert_eq!(e_bound(3, 2).unwrap().value, Amount::from(1));
        assert_eq!(e_bound(12, 3).unwrap().value, Amount::from(3));
        assert!(e_bound(12, 4).is_err());
        assert!(e_bound(1, 2).is_err());
    }

    #[test]
    fn e_sol_values() {
        assert_eq!(e_sol_bound(8, 2).unwrap().value, Amount::from(3));
        assert_eq!(e_sol_bound(93, 2).unwrap().value, Amount::from(1));
        assert_eq!(e_sol_bound(12, 3).unwrap().value, Amount::from(3));
        assert_eq!(e_sol_bound(12, 2).unwrap().value, Amount::from(4));
    }

    #[test]
    fn induced_parts() {
        let v = induced_module_bound(&InducedModuleCase::Dimension { a: 1 }, 12, 2).unwrap();
        assert_eq!(v.value, Amount::from(4));
        let v = induced_module_bound(&InducedModuleCase::Soluble { a: 1, chi1: Amount::Infinite }, 12, 2).unwrap();
        assert_eq!(v.value, Amount::from(4));
        let v = induced_module_bound(&InducedModuleCase::CoprimeSylow { a: 2, chi1: Amount::from(1), r: 3 }, 12, 2)
            .unwrap();
        assert_eq!(v.value, Amount::from(4));
        let v = induced_module_bound(&InducedModuleCase::CoreOrbits { chi: Amount::from(2) }, 8, 2).unwrap();
        // 2 * floor(8 b / sqrt 3) = 2 * 3
        assert_eq!(v.value, Amount::from(6));
        assert!(induced_module_bound(&InducedModuleCase::CoreOrbits { chi: Amount::from(1) }, 9, 2).is_err());
        let v =
            induced_module_bound(&InducedModuleCase::SolubleOrbits { a: 1, orbit_sizes: vec![4, 8] }, 12, 2).unwrap();
        // E_sol(4,2) = min{ws(4) = 2, 4}, E_sol(8,2) = 3
        assert_eq!(v.value, Amount::from(5));
        assert!(
            induced_module_bound(&InducedModuleCase::SolubleOrbits { a: 1, orbit_sizes: vec![4, 4] }, 12, 2).is_err()
        );
    }

    #[test]
    fn split_switches_at_threshold() {
        let low = split_bound(1260, 1).unwrap();
        assert_eq!(low.trace[0].detail, "floor(2*1*1260 / (c' log 1260))");
        let high = split_bound(1261, 1).unwrap();
        assert!(high.trace[0].detail.starts_with("floor(1 b1 1261"));
        assert_eq!(split_bound(4, 0).unwrap().value, Amount::zero());
        // 2*1260/(0.55228 * 10.299) = 443.0..; 1.12838 * 1261 / sqrt(10.30) = 443.3..
        assert_eq!(low.value, Amount::from(443));
        assert_eq!(high.value, Amount::from(443));
    }
}
