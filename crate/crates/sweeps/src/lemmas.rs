//! Standalone checks: the prime-power lemma, the central binomial bound,
//! the Wallis partial products, and antichain widths of chain products.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use transgen_numth::{binom, factorize, lpp};
use transgen_poset::ChainProduct;
use transgen_xreal::{certified_floor, certified_le, ConstantId, Interval, RealExpr};

use crate::{SweepError, SweepReport};

/// Working precision for the running products; far below the accumulated
/// rounding it would take to blur a step of the Wallis product at `t = 10^6`.
const PRODUCT_PRECISION: u32 = 160;

/// `Some(a < b)` when the enclosures decide it.
fn decide_lt(a: &Interval, b: &Interval) -> Option<bool> {
    if a.hi_scaled() < b.lo_scaled() {
        Some(true)
    } else if a.lo_scaled() >= b.hi_scaled() {
        Some(false)
    } else {
        None
    }
}

fn two_over_pi(prec: u32) -> Result<Interval, SweepError> {
    Ok((RealExpr::int(2) / RealExpr::Pi).eval(prec)?)
}

/// `lpp(n) >= c' log n`, checked directly.
pub fn lemma28_holds_at(n: u64) -> Result<bool, SweepError> {
    let rhs = RealExpr::constant(ConstantId::CPrime) * RealExpr::from(n).log2();
    Ok(certified_le(&rhs, &RealExpr::from(lpp(n)))?)
}

/// Largest `n` allowed by `lpp(n) = l`: since `c' log n = ln n / 1.25506`,
/// the lemma at `n` reads `n <= exp(1.25506 l)`.
fn lemma28_ceiling(l: u64) -> Result<BigInt, SweepError> {
    let exponent = RealExpr::ratio(125_506, 100_000) * l / RealExpr::int(2).ln();
    Ok(certified_floor(&exponent.pow2())?)
}

/// Lemma on the largest prime-power divisor for every `2 <= n <= n_max`.
/// Ceilings are computed once per distinct `lpp`; the ceiling grows with
/// `l`, so beyond the first `l` whose ceiling reaches `n_max` all values pass.
pub fn check_lemma28(n_max: u64) -> Result<SweepReport, SweepError> {
    let mut report = SweepReport::new("lemma28", "c'*log2 n", "lpp(n)").with_threshold(2);
    let mut ceilings: HashMap<u64, BigInt> = HashMap::new();
    let mut saturating: Option<u64> = None;
    for l in 2.. {
        let ceiling = lemma28_ceiling(l)?;
        let done = ceiling >= BigInt::from(n_max);
        ceilings.insert(l, ceiling);
        if done {
            saturating = Some(l);
            break;
        }
    }
    let saturating = saturating.expect("ceilings grow without bound");
    report.record((2..=n_max).map(|n| {
        let l = lpp(n);
        let held = l >= saturating || BigInt::from(n) <= ceilings[&l];
        (n, held)
    }));
    report.note = format!("exp(1.25506 l) >= {n_max} from l = {saturating} on");
    Ok(report)
}

/// Central binomial bound `C(K, floor(K/2)) <= b 2^K / sqrt K` for
/// `1 <= K <= k_max`, i.e. `K x_K^2 <= 2/pi` with `x_K = C(K, floor(K/2)) / 2^K`.
/// `x_K` is carried as an interval through `x_(2j+1) = x_(2j) (2j+1) / (2j+2)`
/// and `x_(2j+2) = x_(2j+1)`.
pub fn check_eq31(k_max: u64) -> Result<SweepReport, SweepError> {
    let mut report = SweepReport::new("eq31", "C(K, floor(K/2))", "b*2^K/sqrt(K)").with_threshold(1);
    let limit = two_over_pi(PRODUCT_PRECISION)?;
    let mut x = Interval::from_int(1, PRODUCT_PRECISION); // x_0
    let mut outcomes = Vec::with_capacity(k_max as usize);
    for k in 1..=k_max {
        if k % 2 == 1 {
            let j = (k - 1) / 2;
            x = x.mul_int(&BigInt::from(2 * j + 1)).div_int(&BigInt::from(2 * j + 2));
        }
        let scaled = x.mul(&x).mul_int(&BigInt::from(k));
        // K x_K^2 is rational and 2/pi is not, so strict and weak agree.
        let held = decide_lt(&scaled, &limit)
            .ok_or_else(|| SweepError::Undecided(format!("central binomial bound at K = {k}")))?;
        outcomes.push((k, held));
    }
    report.record(outcomes);
    Ok(report)
}

/// The exact central binomial bound at one `K`, for cross-checking.
pub fn eq31_holds_at(k: u64) -> Result<bool, SweepError> {
    let lhs = RealExpr::from(binom(k, k / 2)) * RealExpr::from(k).sqrt();
    let rhs = RealExpr::constant(ConstantId::B) * RealExpr::from(BigInt::from(1u8) << k);
    Ok(certified_le(&lhs, &rhs)?)
}

/// Summary of the Wallis partial products `s_t = (1/2) prod_(j=2..t) (1 + 1/(4j(j-1)))`.
#[derive(Debug, Clone)]
pub struct WallisCheck {
    pub report: SweepReport,
    /// Decimal enclosure of `s_(t_max)`.
    pub last: (String, String),
}

/// `s_t` strictly increasing and below `2/pi` for `2 <= t <= t_max`.
pub fn check_wallis(t_max: u64) -> Result<WallisCheck, SweepError> {
    let mut report = SweepReport::new("wallis", "(1/2) prod_(j=2..t) (1 + 1/(4j(j-1)))", "2/pi").with_threshold(2);
    let limit = two_over_pi(PRODUCT_PRECISION)?;
    let mut s = Interval::from_int(1, PRODUCT_PRECISION).div_int(&BigInt::from(2)); // s_1
    let mut outcomes = Vec::with_capacity(t_max as usize);
    for t in 2..=t_max {
        let q = BigInt::from(4 * t * (t - 1));
        let next = s.mul_int(&(&q + 1u8)).div_int(&q);
        let undecided = || SweepError::Undecided(format!("Wallis product at t = {t}"));
        let increasing = decide_lt(&s, &next).ok_or_else(undecided)?;
        let below = decide_lt(&next, &limit).ok_or_else(undecided)?;
        outcomes.push((t, increasing && below));
        s = next;
    }
    report.record(outcomes);
    Ok(WallisCheck { report, last: s.decimal_bounds(8) })
}

/// De Bruijn: the width of the divisor lattice of `n` equals its largest
/// rank level, checked against the matching oracle for `2 <= n <= n_max`.
pub fn check_debruijn(n_max: u64) -> Result<SweepReport, SweepError> {
    let mut report =
        SweepReport::new("debruijn", "width_rank(divisors(n))", "width_oracle(divisors(n))").with_threshold(2);
    let outcomes: Vec<(u64, bool)> = (2..=n_max)
        .into_par_iter()
        .map(|n| {
            let lattice = ChainProduct::from_divisors(n)?;
            Ok((n, lattice.width_rank() == u128::from(lattice.width_oracle()?)))
        })
        .collect::<Result<_, SweepError>>()?;
    report.record(outcomes);
    Ok(report)
}

/// Width bounds for a cartesian product of chains of cardinality `n >= 2`:
/// `w <= floor(b n / sqrt(log n))`, and `w <= floor(b p^t / sqrt(t (p-1)))`
/// when all `t` chains have size `p`. Results are cached per multiset of sizes.
fn width_bounds_hold(sizes: &[u64], cache: &mut HashMap<Vec<u64>, bool>) -> Result<bool, SweepError> {
    if let Some(&v) = cache.get(sizes) {
        return Ok(v);
    }
    let product = ChainProduct::new(sizes.iter().copied())?;
    let width = BigInt::from(product.width_rank());
    let n = RealExpr::from(BigInt::from(product.cardinality()));
    let general = certified_floor(&(RealExpr::constant(ConstantId::B) * n.clone() / n.log2().sqrt()))?;
    let mut held = width <= general;
    if sizes.windows(2).all(|w| w[0] == w[1]) {
        let (p, t) = (sizes[0], sizes.len() as u64);
        let uniform = RealExpr::constant(ConstantId::B) * RealExpr::from(BigInt::from(product.cardinality()))
            / RealExpr::from(t * (p - 1)).sqrt();
        held &= width <= certified_floor(&uniform)?;
    }
    cache.insert(sizes.to_vec(), held);
    Ok(held)
}

/// The width bound on the divisor lattice of every `2 <= m <= m_max`, and on
/// the prime-chain product of every `2 <= m <= prime_max`.
pub fn check_width_bound(m_max: u64, prime_max: u64) -> Result<SweepReport, SweepError> {
    let mut report = SweepReport::new("width-bound", "w(P)", "floor(b*|P|/sqrt(log2 |P|))").with_threshold(2);
    let mut cache = HashMap::new();
    let mut outcomes = Vec::new();
    for m in 2..=m_max {
        let mut sizes = factorize(m)?.chain_sizes();
        sizes.sort_unstable();
        outcomes.push((m, width_bounds_hold(&sizes, &mut cache)?));
    }
    for m in 2..=prime_max {
        let mut sizes = ChainProduct::prime_chains(m)?.sizes().to_vec();
        sizes.sort_unstable();
        let held = width_bounds_hold(&sizes, &mut cache)?;
        if !held {
            report.note = format!("prime-chain product of {m} fails");
        }
        outcomes.push((m, held));
    }
    report.record(outcomes);
    let prime_points = prime_max.saturating_sub(1);
    if report.note.is_empty() {
        report.note = format!(
            "{} divisor lattices then {prime_points} prime-chain products, {} distinct shapes",
            m_max.saturating_sub(1),
            cache.len()
        );
    }
    Ok(report)
}
