//! Sweeps that lean on the induction store: the finite part of the
//! block-size-2 case, and the block sizes `m >= 10`.

use num_bigint::{BigInt, BigUint};
use num_traits::{Pow, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;
use transgen_bounds::{e_bound, e_bound_factored, f_function, profiles_of_degree, SolubilityContext};
use transgen_engine::{generic_bound, imprimitive_case_bound, AsData, DegreeClass, DegreeStore, Engine};
use transgen_numth::{floor_log2, Factorization};
use transgen_xreal::{certified_floor, certified_lt, ConstantId, RealExpr};

use crate::appendix_b::m2_analytic_threshold;
use crate::plan::big_grid;
use crate::{SweepError, SweepReport};

/// Degrees `n` below which block size `m >= 10` is handled by explicit computation.
pub const SPLIT_DEGREE: u64 = 1261;

/// `floor(c n / sqrt(log n))` for degrees past `u64`.
fn generic_big(n: &BigUint) -> Result<BigUint, SweepError> {
    let v = certified_floor(
        &(RealExpr::constant(ConstantId::C) * RealExpr::from(n.clone()) / RealExpr::from(n.clone()).log2().sqrt()),
    )?;
    Ok(v.to_biguint().expect("positive bound"))
}

/// Upper bound on `dt(n)` as the induction has it: the store for degrees
/// that fit in `u64`, the generic bound beyond.
fn dt_big(store: &DegreeStore, n: &BigUint) -> Result<BigUint, SweepError> {
    match n.to_u64() {
        Some(small) => Ok(BigUint::from(store.dt_upper(small)?)),
        None => generic_big(n),
    }
}

/// `floor(c d / sqrt(log d))` at any size.
fn generic_at(d: &BigUint) -> Result<BigUint, SweepError> {
    match d.to_u64() {
        Some(small) => Ok(BigUint::from(generic_bound(small)?)),
        None => generic_big(d),
    }
}

fn is_tabulated(store: &DegreeStore, d: &BigUint) -> bool {
    d.to_u64().is_some_and(|d| store.class_of(d) != DegreeClass::Generic)
}

/// The odd parts `q = 3^a 5^b 7^c 11^d 13^e 17^f` with `a <= 2` and the
/// other exponents at most 1, in increasing order. `q = 1` is among them.
pub fn smooth_odd_parts() -> Vec<u64> {
    let mut out = Vec::new();
    for l3 in 0..=2u32 {
        for mask in 0u32..32 {
            let mut q = 3u64.pow(l3);
            for (i, p) in [5u64, 7, 11, 13, 17].into_iter().enumerate() {
                if mask >> i & 1 == 1 {
                    q *= p;
                }
            }
            out.push(q);
        }
    }
    out.sort_unstable();
    out
}

/// `floor(log2(10^66 / q))`.
pub fn max_two_exponent(q: u64) -> u64 {
    floor_log2(&(m2_analytic_threshold() / BigUint::from(q)))
}

/// Which exponents `k` the finite block-size-2 sweep visits for each `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TwoBlockMode {
    /// Every `0 <= k <= k_q`.
    Exhaustive,
    /// Every `k <= dense`, then every `stride`-th `k`, and `k_q` itself.
    Sampled { dense: u64, stride: u64 },
}

impl Default for TwoBlockMode {
    fn default() -> Self {
        TwoBlockMode::Sampled { dense: 48, stride: 8 }
    }
}

impl TwoBlockMode {
    fn exponents(self, k_q: u64) -> Vec<u64> {
        match self {
            TwoBlockMode::Exhaustive => (0..=k_q).collect(),
            TwoBlockMode::Sampled { dense, stride } => {
                let mut ks: Vec<u64> = (0..=k_q).filter(|&k| k <= dense || k % stride.max(1) == 0).collect();
                if ks.last() != Some(&k_q) {
                    ks.push(k_q);
                }
                ks
            }
        }
    }
}

/// `E(n,2) + dt(n) <= floor(c 2n / sqrt(log 2n))` for `n = 2^k q < 10^66`
/// over the smooth odd parts `q`. Degrees `2n` with a tabulated bound are
/// settled by their table and not checked here.
pub fn sweep_m2_finite(store: &DegreeStore, mode: TwoBlockMode) -> Result<SweepReport, SweepError> {
    let mut report =
        SweepReport::new("m2-finite", "E(n,2) + dt(n), n = 2^k*q", "floor(c*2n/sqrt(log2 2n))").with_threshold(1);
    let mut points = Vec::new();
    for q in smooth_odd_parts() {
        for k in mode.exponents(max_two_exponent(q)) {
            points.push((k, q));
        }
    }
    let mut outcomes: Vec<(BigUint, String, bool)> = points
        .par_iter()
        .filter_map(|&(k, q)| {
            let n = BigUint::from(q) << k;
            if is_tabulated(store, &(&n * 2u8)) {
                return None;
            }
            Some(two_block_point(store, k, q, n))
        })
        .collect::<Result<_, _>>()?;
    let covered = points.len() - outcomes.len();
    outcomes.sort_by(|a, b| a.0.cmp(&b.0));
    report.record(outcomes.into_iter().map(|(_, label, held)| (label, held)));
    report.note = format!(
        "{} odd parts, mode {mode:?}; {covered} points with tabulated 2n left to their tables",
        smooth_odd_parts().len()
    );
    Ok(report)
}

fn two_block_point(store: &DegreeStore, k: u64, q: u64, n: BigUint) -> Result<(BigUint, String, bool), SweepError> {
    let mut pairs = vec![(2u64, k as u32)];
    let mut rest = q;
    for p in [3u64, 5, 7, 11, 13, 17] {
        let mut e = 0u32;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            pairs.push((p, e));
        }
    }
    let factored = Factorization::from_pairs(pairs)?;
    let e = e_bound_factored(&factored, 2)?.floor().expect("2-part is nontrivial or n/lpp is finite");
    let lhs = BigInt::from(dt_big(store, &n)?) + e;
    let goal = BigInt::from(generic_at(&(&n * 2u8))?);
    let label = format!("2^{k}*{q}");
    Ok((n, label, lhs <= goal))
}

/// Where the `as(m)` values used for one block size came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AsSource {
    Supplied,
    /// Largest composition length among the embedded chief factor profiles.
    Profiles,
}

/// `as(m)` for every `m` in `10..=480` that has a value: supplied data
/// first, then the embedded profiles (degrees 12 and 16).
pub fn composition_lengths(data: Option<&AsData>) -> Vec<(u64, u64, AsSource)> {
    let mut out = Vec::new();
    for m in 10..=480u64 {
        if let Some(a) = data.and_then(|d| d.get(m)) {
            out.push((m, a, AsSource::Supplied));
        } else if let Some(a) = profiles_of_degree(m).iter().map(|p| u64::from(p.composition_length())).max() {
            out.push((m, a, AsSource::Profiles));
        }
    }
    out
}

/// `n <= 1260` for which block size 16 falls back to the chief factor bound.
pub const M16_FALLBACK: std::ops::RangeInclusive<u64> = 72..=1260;

/// Readings of the block-size-16 fallback bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FallbackReading {
    /// `7 E(n,2) + 2 E(n,3) + dt(n)`.
    Multiplied,
    /// The chief factor sum maximized over the degree-16 primitive groups.
    Profiles,
}

/// Reports for block sizes `m >= 10`.
#[derive(Debug, Clone, Serialize)]
pub struct Section6Sweep {
    pub large_n: SweepReport,
    pub small_n: SweepReport,
    pub fallback: Vec<SweepReport>,
    pub closed_form: SweepReport,
    /// Block sizes in `10..=480` with no `as(m)` value.
    pub missing: Vec<u64>,
}

impl Section6Sweep {
    pub fn reports(&self) -> Vec<&SweepReport> {
        let mut v = vec![&self.large_n, &self.small_n];
        v.extend(&self.fallback);
        v.push(&self.closed_form);
        v
    }
}

/// Runs the checks for block sizes `m >= 10`:
/// - `f(as(m), log m, log 1261) < c` for each `m <= 480` with an `as(m)` value;
/// - for `2 <= n <= 1260`, `min{floor(2 as(m) n/(c' log n)), n floor(log m)} + dt(n)`
///   against the bound at `mn`, with block size 16 and `72 <= n <= 1260`
///   handed to the fallback;
/// - the fallback under both readings;
/// - the closed form for `m >= 481`.
pub fn sweep_section6(engine: &Engine) -> Result<Section6Sweep, SweepError> {
    let store = engine.store();
    let lengths = composition_lengths(engine.as_data());
    let missing: Vec<u64> = (10..=480).filter(|m| !lengths.iter().any(|&(have, _, _)| have == *m)).collect();
    let sources = lengths.iter().filter(|l| l.2 == AsSource::Supplied).count();
    let source_note = format!(
        "{} block sizes ({sources} supplied, {} from profiles), {} without data",
        lengths.len(),
        lengths.len() - sources,
        missing.len()
    );

    let mut large_n = SweepReport::new("section6/large-n", "f(as(m), log2 m, log2 1261)", "c").with_threshold(10);
    let held: Vec<(u64, bool)> = lengths
        .par_iter()
        .map(|&(m, a, _)| {
            let f = f_function(RealExpr::from(a), RealExpr::from(m).log2(), RealExpr::from(SPLIT_DEGREE).log2());
            Ok((m, certified_lt(&f, &RealExpr::constant(ConstantId::C))?))
        })
        .collect::<Result<_, SweepError>>()?;
    large_n.record(held);
    large_n.note = source_note.clone();

    let mut small_n = SweepReport::new(
        "section6/small-n",
        "min{floor(2*as(m)*n/(c'*log2 n)), n*floor(log2 m)} + dt(n)",
        "floor(c*mn/sqrt(log2 mn))",
    )
    .with_threshold(2);
    let pairs: Vec<(u64, u64, u64)> = lengths
        .iter()
        .flat_map(|&(m, a, _)| (2..SPLIT_DEGREE).map(move |n| (m, a, n)))
        .filter(|&(m, _, n)| !(m == 16 && M16_FALLBACK.contains(&n)))
        .collect();
    let held: Vec<(String, bool)> = pairs
        .par_iter()
        .map(|&(m, a, n)| Ok((format!("m={m},n={n}"), small_n_holds(store, m, a, n)?)))
        .collect::<Result<_, SweepError>>()?;
    small_n.record(held);
    small_n.note = source_note;

    let mut fallback = Vec::new();
    if lengths.iter().any(|&(m, _, _)| m == 16) {
        // The primary bound really does fail on this range; record where.
        let a16 = lengths.iter().find(|l| l.0 == 16).map(|l| l.1).expect("checked above");
        let primary: Vec<(u64, bool)> = M16_FALLBACK
            .clone()
            .into_par_iter()
            .map(|n| Ok((n, small_n_holds(store, 16, a16, n)?)))
            .collect::<Result<_, SweepError>>()?;
        let primary_failures = primary.iter().filter(|p| !p.1).count();
        let first_primary_failure = primary.iter().find(|p| !p.1).map(|p| p.0);
        for reading in [FallbackReading::Multiplied, FallbackReading::Profiles] {
            let (id, lhs) = match reading {
                FallbackReading::Multiplied => ("section6/m16-fallback/multiplied", "7*E(n,2) + 2*E(n,3) + dt(n)"),
                FallbackReading::Profiles => {
                    ("section6/m16-fallback/profiles", "max over degree-16 R of the chief factor sum + dt(n)")
                }
            };
            let mut report =
                SweepReport::new(id, lhs, "floor(c*16n/sqrt(log2 16n))").with_threshold(*M16_FALLBACK.start());
            let held: Vec<(u64, bool)> = M16_FALLBACK
                .clone()
                .into_par_iter()
                .map(|n| Ok((n, fallback_holds(store, reading, n)?)))
                .collect::<Result<_, SweepError>>()?;
            report.record(held);
            report.note =
                format!("primary bound fails at {primary_failures} of these n, first at {first_primary_failure:?}");
            fallback.push(report);
        }
    }

    Ok(Section6Sweep { large_n, small_n, fallback, closed_form: sweep_closed_form()?, missing })
}

fn small_n_holds(store: &DegreeStore, m: u64, a: u64, n: u64) -> Result<bool, SweepError> {
    let count = certified_floor(
        &(RealExpr::int(2 * a) * n / (RealExpr::constant(ConstantId::CPrime) * RealExpr::from(n).log2())),
    )?;
    let blocks = BigInt::from(n * u64::from(m.ilog2()));
    let lhs = count.min(blocks) + BigInt::from(store.dt_upper(n)?);
    // Tabulated degrees mn are settled by their tables; the claim here is the generic bound.
    Ok(lhs <= BigInt::from(generic_bound(m * n)?))
}

fn fallback_holds(store: &DegreeStore, reading: FallbackReading, n: u64) -> Result<bool, SweepError> {
    let value = match reading {
        FallbackReading::Multiplied => {
            let e2 = e_bound(n, 2)?.floor().expect("finite");
            let e3 = e_bound(n, 3)?.floor().expect("finite");
            BigInt::from(7) * e2 + BigInt::from(2) * e3 + BigInt::from(store.dt_upper(n)?)
        }
        FallbackReading::Profiles => {
            let case = imprimitive_case_bound(16 * n, 16, n, SolubilityContext::General, store)?;
            BigInt::from(case.value()?)
        }
    };
    Ok(value <= BigInt::from(generic_bound(16 * n)?))
}

/// `([(2 + c0) log m - (1/3) log 24] b0 + c1) n / sqrt(log n)`.
pub fn closed_form_lhs(m: RealExpr, n: RealExpr) -> RealExpr {
    let inner = (RealExpr::int(2) + ConstantId::C0) * m.log2() - RealExpr::int(24).log2() / 3;
    (inner * ConstantId::B0 + ConstantId::C1) * n.clone() / n.log2().sqrt()
}

/// Block sizes `m >= 481` against `c m n / sqrt(log mn)`. The ratio of the
/// two sides falls as `n` grows, so `n = 2` is the binding case; a grid of
/// larger `n` is checked as well. `m` runs over `481..=1000`, then a
/// geometric grid to `10^9`, then decades to `10^30`.
pub fn sweep_closed_form() -> Result<SweepReport, SweepError> {
    let mut report = SweepReport::new(
        "section6/closed-form",
        "([(2+c0)*log2 m - (1/3)*log2 24]*b0 + c1)*n/sqrt(log2 n)",
        "c*m*n/sqrt(log2 mn)",
    )
    .with_threshold(481);
    let mut ms: Vec<BigUint> = (481..=1000u64).map(BigUint::from).collect();
    let mut m = 1000u64;
    while m < 1_000_000_000 {
        m += m / 16;
        ms.push(BigUint::from(m.min(1_000_000_000)));
    }
    ms.extend(big_grid(&BigUint::from(10u32).pow(10u32), 20, 1));
    ms.sort();
    ms.dedup();
    let ns: Vec<u64> = (2..=16).chain([100, 1000, 10_000, 1_000_000, 1_000_000_000]).collect();
    let held: Vec<(String, bool)> = ms
        .par_iter()
        .map(|m| {
            let mut ok = true;
            for &n in &ns {
                let lhs = closed_form_lhs(RealExpr::from(m.clone()), RealExpr::from(n));
                let rhs = RealExpr::constant(ConstantId::C) * RealExpr::from(m.clone()) * n
                    / (RealExpr::from(m.clone()) * n).log2().sqrt();
                ok &= certified_lt(&lhs, &rhs)?;
            }
            Ok((m.to_string(), ok))
        })
        .collect::<Result<_, SweepError>>()?;
    report.record(held);
    report.note = format!("{} block sizes, n in {ns:?}", ms.len());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ninety_six_odd_parts() {
        let qs = smooth_odd_parts();
        assert_eq!(qs.len(), 96);
        assert_eq!(qs[0], 1);
        assert_eq!(*qs.last().unwrap(), 9 * 5 * 7 * 11 * 13 * 17);
        assert_eq!(max_two_exponent(1), 219);
        assert_eq!(max_two_exponent(3), 217);
    }

    #[test]
    fn sampled_exponents_end_at_k_q() {
        let ks = TwoBlockMode::Sampled { dense: 4, stride: 10 }.exponents(33);
        assert_eq!(ks, vec![0, 1, 2, 3, 4, 10, 20, 30, 33]);
        assert_eq!(TwoBlockMode::Exhaustive.exponents(3), vec![0, 1, 2, 3]);
    }

    #[test]
    fn two_block_points_use_the_store() {
        let engine = Engine::new().unwrap();
        let store = engine.store();
        assert_eq!(dt_big(store, &BigUint::from(48u8)).unwrap(), BigUint::from(16u8));
        assert_eq!(dt_big(store, &BigUint::from(15u8)).unwrap(), BigUint::from(2u8));
        // 2n = 96 has its own table row (31), below E(48,2) + dt(48) = 32,
        // so the sweep leaves it to the table; the generic bound 32 is a tie.
        assert!(is_tabulated(store, &BigUint::from(96u8)));
        assert_eq!(store.dt_upper(96).unwrap(), 31);
        let (_, _, held) = two_block_point(store, 4, 3, BigUint::from(48u8)).unwrap();
        assert!(held);
        // n = 2^4*7 = 112: E = 16, dt(112) = floor(c 112 / sqrt(log 112)) = 37,
        // against floor(c 224 / sqrt(log 224)) = 69.
        let (_, label, held) = two_block_point(store, 4, 7, BigUint::from(112u8)).unwrap();
        assert_eq!(label, "2^4*7");
        assert!(held);
    }

    #[test]
    fn profile_lengths_cover_12_and_16() {
        let lengths = composition_lengths(None);
        let ms: Vec<u64> = lengths.iter().map(|l| l.0).collect();
        assert_eq!(ms, vec![12, 16]);
        // S12 has length 2; (S4xS4):C2 has 1+1+1+2+4 = 9.
        assert_eq!((lengths[0].1, lengths[1].1), (2, 9));
        assert!(lengths.iter().all(|l| l.2 == AsSource::Profiles));
    }

    #[test]
    fn closed_form_at_the_boundary() {
        let lhs = closed_form_lhs(RealExpr::from(481u64), RealExpr::from(2u64));
        let rhs = RealExpr::constant(ConstantId::C) * 962u64 / RealExpr::from(962u64).log2().sqrt();
        assert!(certified_lt(&lhs, &rhs).unwrap());
    }
}
