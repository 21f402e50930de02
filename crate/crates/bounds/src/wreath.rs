//! Bounds for subgroups `G` of a wreath product `R wr S_n` whose top
//! projection is transitive, in terms of the chief factors of `R`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};
use serde::Serialize;
use transgen_mersenne::MersenneTriple;
use transgen_numth::{factorize, Factorization, Rational};
use transgen_xreal::{certified_floor, ConstantId, RealExpr};

use crate::induced::{e_bound, e_sol_bound, e_sol_bound_factored, split_bound};
use crate::profile::ChiefFactorProfile;
use crate::value::{Amount, BoundValue, Rule};
use crate::BoundsError;

/// Selects `D = E_sol` when `G` has a subgroup whose top projection is
/// soluble and transitive, and `D = E` otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolubilityContext {
    SolubleTransitive,
    General,
}

impl SolubilityContext {
    /// `D(n, p)` for this context.
    pub fn d(self, n: u64, p: u64) -> Result<BoundValue, BoundsError> {
        match self {
            SolubilityContext::SolubleTransitive => e_sol_bound(n, p),
            SolubilityContext::General => e_bound(n, p),
        }
    }
}

fn sum_over_primes(
    counts: impl IntoIterator<Item = (u64, u32)>,
    n: u64,
    ctx: SolubilityContext,
) -> Result<BoundValue, BoundsError> {
    let mut total = BoundValue::new(0u64, Rule::ChiefFactors, format!("sum a_(p) D({n},p), {ctx:?}"));
    for (p, a) in counts {
        total = total.plus(ctx.d(n, p)?.scaled(&Amount::from(u64::from(a))));
    }
    Ok(total)
}

/// `sum_p a_(p) D(n,p) + c_nonab(R) + d(pi(G))`, floored at the end.
pub fn chief_factor_bound(
    profile: &ChiefFactorProfile,
    n: u64,
    ctx: SolubilityContext,
    d_top: BoundValue,
) -> Result<BoundValue, BoundsError> {
    let nonab = u64::from(profile.c_nonab());
    let abelian = sum_over_primes(profile.prime_multiplicities(), n, ctx)?;
    let detail = format!("{} with n = {n}: abelian part + c_nonab = {nonab} + d(S)", profile.name);
    let total = abelian.plus(BoundValue::new(nonab, Rule::ChiefFactors, detail)).plus(d_top);
    Ok(total.floored())
}

/// Where the sum over `k` starts in [`mersenne_chain_bound`]. The general
/// statement sums from `k = 0`; its application to degree `2^m * 3` sums from `k = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SumStart {
    Zero,
    One,
}

/// `a * sum_k 2^t C(r,k) E_sol(3 p^k, 2) + d(pi(G))` for an admissible triple.
pub fn mersenne_chain_bound(
    a: u64,
    triple: &MersenneTriple,
    start: SumStart,
    d_top: BoundValue,
) -> Result<BoundValue, BoundsError> {
    let p: u64 = (1u64 << triple.e) - 1;
    let k0 = match start {
        SumStart::Zero => 0,
        SumStart::One => 1,
    };
    let mut sum = Amount::zero();
    for k in k0..=triple.r {
        let n = Factorization::from_pairs([(3, 1), (p, k)])?;
        let e_sol = e_sol_bound_factored(&n, 2)?;
        let weight = Amount::int(BigInt::from(transgen_numth::binom(u64::from(triple.r), u64::from(k)) << triple.t));
        sum = sum.add(&weight.mul(&e_sol.value));
    }
    let value = Amount::from(a).mul(&sum);
    let detail = format!(
        "{a} * sum_{{k={k0}..{}}} 2^{} C({},k) E_sol(3*{p}^k, 2), each E_sol = 1 as 3p^k is odd",
        triple.r, triple.t, triple.r
    );
    Ok(BoundValue::new(value, Rule::MersenneOrbits, detail).plus(d_top))
}

/// `a_1 * n^(u/v)` floored exactly, for `0 <= u/v`.
fn floor_scaled_power(a: u64, n: u64, exponent: &Rational) -> Result<BigInt, BoundsError> {
    if exponent.is_negative() {
        return Err(BoundsError::Domain("negative exponent".into()));
    }
    let u: u32 = exponent.numer().try_into().map_err(|_| BoundsError::Domain("exponent too large".into()))?;
    let v: u32 = exponent.denom().try_into().map_err(|_| BoundsError::Domain("exponent too large".into()))?;
    // floor(a n^(u/v)) = floor((a^v n^u)^(1/v)) for nonnegative integers.
    let radicand = BigUint::from(a).pow(v) * BigUint::from(n).pow(u);
    Ok(BigInt::from(radicand.nth_root(v)))
}

/// How the first operand of [`orbit_refined_bound`] is written in the
/// general context. `Literal` omits the factor `b` (weaker, always safe);
/// `WithB` uses `chi floor(b n / sqrt(log_p n_p))` as for induced modules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum OrbitForm {
    #[default]
    Literal,
    WithB,
}

/// Parameters of [`orbit_refined_bound`]: a chief factor `L` of order
/// `p^a`, a subgroup `X` with `chi` orbits on `L \ 1` (and `chi1` orbits of a
/// Sylow `r`-subgroup), and the chief factors `rest` of `R / L` as `(p_i, a_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitRefinedInput {
    pub n: u64,
    pub p: u64,
    pub a: u64,
    pub chi: Amount,
    pub chi1: Amount,
    pub r: u64,
    pub d_x: u64,
    pub rest: Vec<(u64, u32)>,
    pub ctx: SolubilityContext,
    pub form: OrbitForm,
}

/// `min{chi f1 + d(X), chi1 f2 + d(X), a D(n,p)} + sum a_i D(n,p_i) + d(pi(G))`
/// where `(f1, f2)` is `(floor(n / sqrt(log_p n_p)), n / n_r)` in general and
/// `(ws(n), n_p)` in the soluble-transitive context.
pub fn orbit_refined_bound(input: &OrbitRefinedInput, d_top: BoundValue) -> Result<BoundValue, BoundsError> {
    let &OrbitRefinedInput { n, p, a, r, d_x, ctx, form, .. } = input;
    let f = factorize(n)?;
    let d_x_amount = Amount::from(d_x);
    let (first, second) = match ctx {
        SolubilityContext::General => {
            if r == p {
                return Err(BoundsError::Domain(format!("r = {r} must differ from p")));
            }
            let j = f.exponent_of(p);
            let first = if j == 0 {
                Amount::Infinite
            } else {
                let scale = match form {
                    OrbitForm::Literal => RealExpr::from(n),
                    OrbitForm::WithB => RealExpr::constant(ConstantId::B) * n,
                };
                let expr = scale / RealExpr::from(u64::from(j)).sqrt();
                Amount::int(certified_floor(&expr)?)
            };
            let second = Amount::Finite(Rational::new(BigInt::from(n), BigInt::from(f.p_part(r))));
            (first, second)
        }
        SolubilityContext::SolubleTransitive => {
            let ws = if n >= 2 { Amount::Finite(f.ws()?) } else { Amount::from(1) };
            (ws, Amount::int(BigInt::from(f.p_part(p))))
        }
    };
    let first = input.chi.mul(&first).add(&d_x_amount);
    let second = input.chi1.mul(&second).add(&d_x_amount);
    let third = ctx.d(n, p)?.scaled(&Amount::from(a));
    let chosen = BoundValue::new(first.clone(), Rule::OrbitRefined, format!("chi-operand {first} ({form:?} form)"))
        .min(BoundValue::new(second.clone(), Rule::OrbitRefined, format!("chi1-operand {second}")))
        .min(third.noted(Rule::OrbitRefined, format!("dimension operand, a = {a}")));
    let rest = sum_over_primes(input.rest.iter().copied(), n, ctx)?;
    Ok(chosen.plus(rest).plus(d_top).floored())
}

/// `2 D(n,2) + D(n,3) + 1 + d(pi(G))` for blocks inducing `A_4` or `S_4`.
pub fn s4_core_bound(n: u64, ctx: SolubilityContext, d_top: BoundValue) -> Result<BoundValue, BoundsError> {
    let total = ctx
        .d(n, 2)?
        .scaled(&Amount::from(2))
        .plus(ctx.d(n, 3)?)
        .plus(BoundValue::new(1u64, Rule::S4Core, format!("2 D({n},2) + D({n},3) + 1, {ctx:?}")))
        .plus(d_top);
    Ok(total.floored())
}

/// Which estimate of [`prime_split_bound`] applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PrimeSplitCase {
    /// `n_q <= n^alpha` for every prime `q` dividing `|R|`.
    AllPartsSmall,
    /// `n_p >= n^alpha`.
    LargePart,
    /// `n_p <= n^alpha`.
    SmallPart,
}

/// Composition factor counts of `R` relative to a prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CompositionCounts {
    /// Abelian composition factors of order `p`.
    pub a_p: u64,
    /// Abelian composition factors of order prime to `p`.
    pub a_p_prime: u64,
    /// Nonabelian composition factors.
    pub nonabelian: u64,
}

/// Estimates that treat one prime `p` separately from the others, for a
/// parameter `0 < alpha < 1`. The size condition named by `case` is the
/// caller's to guarantee.
pub fn prime_split_bound(
    case: PrimeSplitCase,
    n: u64,
    alpha: &Rational,
    counts: CompositionCounts,
    d_top: BoundValue,
) -> Result<BoundValue, BoundsError> {
    if n < 2 {
        return Err(BoundsError::Domain("degree n must be at least 2".into()));
    }
    if !(alpha.is_positive() && *alpha < Rational::one()) {
        return Err(BoundsError::Domain(format!("alpha = {alpha} must lie in (0, 1)")));
    }
    let log_n = RealExpr::from(n).log2();
    let one_minus = Rational::one() - alpha;
    let root_log_term = |k: u64| -> Result<BigInt, BoundsError> {
        let expr = RealExpr::from(k) * RealExpr::from(alpha.recip()).sqrt() * RealExpr::constant(ConstantId::B) * n
            / log_n.clone().sqrt();
        Ok(certified_floor(&expr)?)
    };
    let CompositionCounts { a_p, a_p_prime, nonabelian } = counts;
    let (value, detail) = match case {
        PrimeSplitCase::AllPartsSmall => {
            let a_ab = a_p + a_p_prime;
            let expr = RealExpr::from(a_ab) * n / (RealExpr::from(one_minus.clone()) * RealExpr::constant(ConstantId::CPrime) * log_n);
            (certified_floor(&expr)?, format!("floor({a_ab} n / ((1 - {alpha}) c' log n)) + {nonabelian}, n = {n}"))
        }
        PrimeSplitCase::LargePart => (
            floor_scaled_power(a_p_prime, n, &one_minus)? + root_log_term(a_p)?,
            format!("floor({a_p_prime} n^(1-{alpha})) + floor({a_p} sqrt(1/{alpha}) b n / sqrt(log n)) + {nonabelian}, n = {n}"),
        ),
        PrimeSplitCase::SmallPart => (
            floor_scaled_power(a_p, n, &one_minus)? + root_log_term(a_p_prime)?,
            format!("floor({a_p} n^(1-{alpha})) + floor({a_p_prime} sqrt(1/{alpha}) b n / sqrt(log n)) + {nonabelian}, n = {n}"),
        ),
    };
    Ok(BoundValue::new(Amount::int(value + nonabelian), Rule::PrimeSplit, detail).plus(d_top))
}

/// `floor(2 a n / (c' log n))` for `n <= 1260`, `floor(a b1 n / sqrt(log n))`
/// beyond, plus `d(pi(G))`, where `a` is the composition length of `R`.
pub fn composition_length_bound(n: u64, a: u64, d_top: BoundValue) -> Result<BoundValue, BoundsError> {
    Ok(split_bound(n, a)?.noted(Rule::CompositionLength, format!("composition length {a}")).plus(d_top))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::profiles_of_degree;

    fn profile(m: u64, name: &str) -> &'static ChiefFactorProfile {
        profiles_of_degree(m).into_iter().find(|p| p.name == name).unwrap()
    }

    fn top(v: u64) -> BoundValue {
        BoundValue::given(v, "d(S)")
    }

    #[test]
    fn chief_factor_examples() {
        let s4 = profile(4, "S4");
        assert_eq!(chief_factor_bound(s4, 2, SolubilityContext::General, top(1)).unwrap().value, Amount::from(5));
        let c2 = profile(2, "C2");
        assert_eq!(chief_factor_bound(c2, 12, SolubilityContext::General, top(4)).unwrap().value, Amount::from(8));
        let empty = ChiefFactorProfile::new(1, "trivial", vec![]);
        assert_eq!(chief_factor_bound(&empty, 12, SolubilityContext::General, top(7)).unwrap().value, Amount::from(7));
    }

    #[test]
    fn mersenne_examples() {
        let t = MersenneTriple::new(5, 1, 0).unwrap();
        assert_eq!(mersenne_chain_bound(1, &t, SumStart::Zero, top(2)).unwrap().value, Amount::from(4));
        assert_eq!(mersenne_chain_bound(1, &t, SumStart::One, top(2)).unwrap().value, Amount::from(3));
        let t = MersenneTriple::new(5, 1, 14).unwrap();
        assert_eq!(mersenne_chain_bound(1, &t, SumStart::Zero, top(282_317)).unwrap().value, Amount::from(315_085));
        assert_eq!(mersenne_chain_bound(0, &t, SumStart::Zero, top(9)).unwrap().value, Amount::from(9));
    }

    #[test]
    fn s4_examples() {
        assert_eq!(s4_core_bound(12, SolubilityContext::General, top(4)).unwrap().value, Amount::from(16));
        assert_eq!(s4_core_bound(2, SolubilityContext::SolubleTransitive, top(1)).unwrap().value, Amount::from(5));
    }

    #[test]
    fn orbit_refined_examples() {
        // chi = +inf leaves the chi1 and dimension operands.
        let input = OrbitRefinedInput {
            n: 12,
            p: 2,
            a: 2,
            chi: Amount::Infinite,
            chi1: Amount::Infinite,
            r: 3,
            d_x: 1,
            rest: vec![(3, 1)],
            ctx: SolubilityContext::General,
            form: OrbitForm::Literal,
        };
        // min{inf, inf, 2 E(12,2) = 8} + E(12,3) = 3 + d(S) = 4
        assert_eq!(orbit_refined_bound(&input, top(4)).unwrap().value, Amount::from(15));
        // S4 core: L = V4, X of order 3 acting transitively on L \ 1, r = 3.
        let s4 = OrbitRefinedInput { chi: Amount::from(1), chi1: Amount::from(1), ..input.clone() };
        // min{floor(12/sqrt 2) + 1 = 9, 12/3 + 1 = 5, 8} + 3 + 4
        assert_eq!(orbit_refined_bound(&s4, top(4)).unwrap().value, Amount::from(12));
        let at_r = OrbitRefinedInput { n: 3, rest: vec![], d_x: 1, ..s4 };
        // min{inf (n_2 = 1), 1 * 3/3 + 1 = 2, ...} + 0
        assert_eq!(orbit_refined_bound(&at_r, top(0)).unwrap().value, Amount::from(2));
    }

    #[test]
    fn prime_split_examples() {
        let none = CompositionCounts { a_p: 0, a_p_prime: 0, nonabelian: 0 };
        let half = Rational::new(1.into(), 2.into());
        for case in [PrimeSplitCase::AllPartsSmall, PrimeSplitCase::LargePart, PrimeSplitCase::SmallPart] {
            assert_eq!(prime_split_bound(case, 100, &half, none, top(6)).unwrap().value, Amount::from(6));
        }
        // n^(1/2) exactly at a perfect square: floor(2 * sqrt(9)) = 6.
        let counts = CompositionCounts { a_p: 2, a_p_prime: 0, nonabelian: 1 };
        let v = prime_split_bound(PrimeSplitCase::SmallPart, 9, &half, counts, top(0)).unwrap();
        assert_eq!(v.value, Amount::from(7));
        assert!(prime_split_bound(PrimeSplitCase::SmallPart, 9, &Rational::one(), counts, top(0)).is_err());
    }

    #[test]
    fn composition_length_examples() {
        assert_eq!(composition_length_bound(4, 0, top(3)).unwrap().value, Amount::from(3));
        let v = composition_length_bound(1260, 1, top(1)).unwrap();
        assert_eq!(v.value, Amount::from(444));
    }
}
