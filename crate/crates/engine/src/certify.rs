//! Per-degree replay of the induction step.

use serde::{Deserialize, Serialize};
use transgen_bounds::{composition_length_bound, BoundValue, Rule, SolubilityContext};
use transgen_numth::divisors;
use transgen_xreal::{certified_floor, certified_lt, ConstantId, RealExpr};

use crate::as_data::{AsData, AS_DATA_RANGE};
use crate::cases::{
    block_count_case, imprimitive_case_bound, primitive_case, top, two_block_case, CaseBound, CaseEvaluation, CaseKind,
    CaseStatus, MAX_PROFILED_BLOCK,
};
use crate::regen::{table61_cases, table_a3_cases};
use crate::store::{generic_bound, to_u64, DegreeClass, DegreeExpr, DegreeStore};
use crate::tables::table_a1;
use crate::EngineError;

/// Block sizes from which the closed form in `m` alone takes over.
pub const CLOSED_FORM_MIN_BLOCK: u64 = 481;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Every case passed.
    Pass,
    /// Some case exceeded its target.
    Fail,
    /// No case failed, but some could not be decided without `as(m)` data.
    Incomplete,
}

/// Every case the induction step needs at one degree, with its outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub degree: u64,
    pub d_expr: String,
    pub class: DegreeClass,
    pub target: u64,
    pub cases: Vec<CaseEvaluation>,
    /// Index into `cases` of the largest evaluated value.
    pub worst: Option<usize>,
    pub verdict: Verdict,
}

fn has_profile_data(m: u64) -> bool {
    m == 4 || (m <= MAX_PROFILED_BLOCK && !transgen_bounds::profiles_of_degree(m).is_empty())
}

/// `([(2 + c0) log m - (1/3) log 24] b0 + c1) n / sqrt(log n)` against
/// `c m n / sqrt(log mn)`, compared as reals.
fn closed_form_case(d: u64, m: u64, n: u64, target: u64) -> Result<CaseEvaluation, EngineError> {
    let log = |x: u64| RealExpr::from(x).log2();
    let lengths = (RealExpr::from(2) + RealExpr::constant(ConstantId::C0)) * log(m) - RealExpr::ratio(1, 3) * log(24);
    let lhs = (lengths * RealExpr::constant(ConstantId::B0) + RealExpr::constant(ConstantId::C1)) * n / log(n).sqrt();
    let rhs = RealExpr::constant(ConstantId::C) * d / log(d).sqrt();
    let value = to_u64(certified_floor(&lhs)?)?;
    let holds = certified_lt(&lhs, &rhs)?;
    let detail = format!("closed form {value} (floor) < c {d} / sqrt(log {d}): {holds}");
    let case = CaseBound {
        kind: CaseKind::LargeBlockClosedForm,
        m: Some(m),
        n: Some(n),
        triple: None,
        f_g: None,
        bound: BoundValue::new(value, Rule::CompositionLength, detail),
    };
    let status = if holds { CaseStatus::Pass } else { CaseStatus::Fail };
    Ok(CaseEvaluation::from_case(case, Some(value), target, status, String::new()))
}

/// Block sizes `10..=480` without chief factor data: with `as(m)` the
/// composition length bound is used, otherwise only block counting, and a
/// block count above the target is reported as skipped.
fn data_band_case(
    d: u64,
    m: u64,
    n: u64,
    target: u64,
    store: &DegreeStore,
    as_data: Option<&AsData>,
) -> Result<CaseEvaluation, EngineError> {
    let counting = block_count_case(d, m, n, store)?;
    let count_value = counting.value()?;
    match as_data.and_then(|a| a.get(m)) {
        Some(length) => {
            let by_length = composition_length_bound(n, length, top(store, n)?)?;
            let case = if by_length.value < counting.bound.value {
                CaseBound { kind: CaseKind::CompositionLength, bound: by_length, ..counting }
            } else {
                counting
            };
            let mut eval = CaseEvaluation::checked(case, target)?;
            eval.note = format!("as({m}) = {length}");
            Ok(eval)
        }
        None if count_value <= target => CaseEvaluation::checked(counting, target),
        None => Ok(CaseEvaluation::from_case(
            counting,
            Some(count_value),
            target,
            CaseStatus::Skipped,
            format!("skipped (external data): as({m}) needed"),
        )),
    }
}

/// The cases for blocks of size `m >= 3` outside the exceptional tables.
fn outer_cases(
    d: u64,
    target: u64,
    store: &DegreeStore,
    as_data: Option<&AsData>,
) -> Result<Vec<CaseEvaluation>, EngineError> {
    let mut out = Vec::new();
    for m in divisors(d) {
        if m < 3 || m == d {
            continue;
        }
        let n = d / m;
        let eval = if has_profile_data(m) {
            CaseEvaluation::checked(imprimitive_case_bound(d, m, n, SolubilityContext::General, store)?, target)?
        } else if AS_DATA_RANGE.contains(&m) {
            data_band_case(d, m, n, target, store, as_data)?
        } else if m >= CLOSED_FORM_MIN_BLOCK {
            closed_form_case(d, m, n, target)?
        } else {
            // Only m = 10..=480 and m >= 481 lack chief factor data.
            unreachable!("block size {m} has no rule");
        };
        out.push(eval);
    }
    Ok(out)
}

/// Enumerates the cases of the induction step at degree `d` and checks each
/// against its target.
pub fn certify(d: u64, store: &DegreeStore, as_data: Option<&AsData>) -> Result<Certificate, EngineError> {
    if d < 2 {
        return Err(EngineError::OutOfRange(format!("degree {d} is below 2")));
    }
    let class = store.class_of(d);
    let (target, cases) = match class {
        DegreeClass::TableA1 => {
            let target = generic_bound(d)?;
            let value = table_a1()[&d];
            let case = CaseBound {
                kind: CaseKind::BaseTable,
                m: None,
                n: None,
                triple: None,
                f_g: None,
                bound: BoundValue::given(value, &format!("dt({d}) from the table of small degrees")),
            };
            (target, vec![CaseEvaluation::checked(case, target)?])
        }
        DegreeClass::Table61 => {
            let target = store.dt_upper(d)?;
            let cases = table61_cases(d, store)?
                .into_iter()
                .map(|c| CaseEvaluation::checked(c, target))
                .collect::<Result<Vec<_>, _>>()?;
            (target, cases)
        }
        DegreeClass::TableA3 { f } => {
            let stored = store.dt_upper(d)?;
            let generic = generic_bound(d)?;
            let mut cases = Vec::new();
            for case in table_a3_cases(d, store)? {
                let f_g = case.f_g.expect("chain cases carry f_G");
                let target = if f.is_some_and(|f| f_g < f) { generic } else { stored };
                cases.push(CaseEvaluation::checked(case, target)?);
            }
            // A group whose minimal blocks exceed 2 has no 2-blocks.
            let outer_target = if f.is_some() { generic } else { stored };
            cases.extend(outer_cases(d, outer_target, store, as_data)?);
            (stored, cases)
        }
        DegreeClass::Generic => {
            let target = generic_bound(d)?;
            let mut cases = vec![CaseEvaluation::checked(primitive_case(d)?, target)?];
            if d % 2 == 0 {
                cases.push(CaseEvaluation::checked(two_block_case(d, SolubilityContext::General, store)?, target)?);
            }
            cases.extend(outer_cases(d, target, store, as_data)?);
            (target, cases)
        }
    };
    let worst = cases
        .iter()
        .enumerate()
        .filter_map(|(i, c)| c.value.map(|v| (v, i)))
        .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
        .map(|(_, i)| i);
    let verdict = if cases.iter().any(|c| c.status == CaseStatus::Fail) {
        Verdict::Fail
    } else if cases.iter().any(|c| c.status == CaseStatus::Skipped) {
        Verdict::Incomplete
    } else {
        Verdict::Pass
    };
    Ok(Certificate { degree: d, d_expr: DegreeExpr(d).to_string(), class, target, cases, worst, verdict })
}
