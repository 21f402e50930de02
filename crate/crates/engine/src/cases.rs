//! The case bounds used at one degree `d = m n`, where `m` is the minimal
//! block size and `n` the number of blocks.

use serde::{Deserialize, Serialize};
use transgen_bounds::{
    chief_factor_bound, e_bound, holt_bound, mersenne_chain_bound, profiles_of_degree, s4_core_bound, BoundValue, Rule,
    SolubilityContext, Step, SumStart,
};
use transgen_mersenne::MersenneTriple;
use transgen_numth::divisors;

use crate::store::{generic_bound, to_u64, DegreeStore};
use crate::EngineError;

/// The degree whose block groups of degree 24 are all simple or have a
/// simple subgroup of index 2, which the generic block-count bound misses.
pub const SIMPLE_BLOCKS_24_DEGREE: u64 = 3_145_728;

/// Largest block size with chief factor data.
pub const MAX_PROFILED_BLOCK: u64 = 16;

/// The inequality behind a case value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseKind {
    /// `d <= 32`: the embedded table of exact maxima.
    BaseTable,
    /// `G` primitive: `floor(log d)` (2 for `S_3`).
    Primitive,
    /// `n floor(log m) + dt(n)`.
    BlockCount,
    /// `E(n,2) + 1 + floor(c n / sqrt(log n))` for blocks of size 24 at the one degree that needs it.
    SimpleBlocks24,
    /// `2 E(n,2) + E(n,3) + 1 + dt(n)` for blocks of size 4.
    S4Core,
    /// Chief factor sum, maximized over the primitive groups of degree `m`.
    ChiefFactors,
    /// Blocks of size 2 with a soluble transitive subgroup: `E_sol(n,2) + dt(n)`.
    TwoBlockSoluble,
    /// Blocks of size 2: `E(n,2) + dt(n)`.
    TwoBlock,
    /// Blocks of size 2 over a minimally transitive top group with `L_2(p)` factors.
    MersenneOrbits,
    /// `f_G` successive 2-block quotients, then the best bound for what remains.
    TwoBlockChain,
    /// `min{composition length bound, n floor(log m)} + dt(n)` from supplied `as(m)`.
    CompositionLength,
    /// Closed form for `m >= 481` combining abelian length and `b0`.
    LargeBlockClosedForm,
}

/// A case value with the parameters that identify the case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseBound {
    pub kind: CaseKind,
    pub m: Option<u64>,
    pub n: Option<u64>,
    pub triple: Option<(u32, u32, u32)>,
    pub f_g: Option<u32>,
    pub bound: BoundValue,
}

impl CaseBound {
    fn new(kind: CaseKind, m: Option<u64>, n: Option<u64>, bound: BoundValue) -> Self {
        Self { kind, m, n, triple: None, f_g: None, bound }
    }

    pub fn value(&self) -> Result<u64, EngineError> {
        let floor =
            self.bound.floor().ok_or_else(|| EngineError::OutOfRange(format!("{:?} bound is infinite", self.kind)))?;
        to_u64(floor)
    }
}

pub(crate) fn top(store: &DegreeStore, n: u64) -> Result<BoundValue, EngineError> {
    Ok(BoundValue::given(store.dt_upper(n)?, &format!("dt({n})")))
}

fn check_split(d: u64, m: u64, n: u64) -> Result<(), EngineError> {
    if m < 2 || n < 2 || m.checked_mul(n) != Some(d) {
        return Err(EngineError::BadFactorization { d, m, n });
    }
    Ok(())
}

fn log2_floor(m: u64) -> u64 {
    u64::from(m.ilog2())
}

/// `floor(log d)`, or 2 at `d = 3`.
pub fn primitive_case(d: u64) -> Result<CaseBound, EngineError> {
    let g = holt_bound(d)?;
    let bound = BoundValue::new(g.with_exception(), Rule::PrimitiveGeneration, format!("floor(log {d})"));
    Ok(CaseBound::new(CaseKind::Primitive, None, None, bound))
}

/// Bound for `G` with minimal blocks of size `m >= 3` and `n` blocks: block
/// counting for `m > 16`, the `A_4`/`S_4` core bound for `m = 4`, and the
/// chief factor sum maximized over all primitive `R` of degree `m` otherwise.
pub fn imprimitive_case_bound(
    d: u64,
    m: u64,
    n: u64,
    ctx: SolubilityContext,
    store: &DegreeStore,
) -> Result<CaseBound, EngineError> {
    check_split(d, m, n)?;
    if m > MAX_PROFILED_BLOCK {
        if d == SIMPLE_BLOCKS_24_DEGREE && m == 24 {
            let gen = generic_bound(n)?;
            let bound = e_bound(n, 2)?
                .plus(BoundValue::new(1u64, Rule::ChiefFactors, "one simple chief factor of R"))
                .plus(BoundValue::given(gen, &format!("floor(c {n} / sqrt(log {n}))")))
                .floored();
            return Ok(CaseBound::new(CaseKind::SimpleBlocks24, Some(m), Some(n), bound));
        }
        return block_count_case(d, m, n, store);
    }
    if m == 4 {
        let bound = s4_core_bound(n, ctx, top(store, n)?)?;
        return Ok(CaseBound::new(CaseKind::S4Core, Some(m), Some(n), bound));
    }
    let profiles = profiles_of_degree(m);
    if profiles.is_empty() {
        return Err(EngineError::NoProfileData(m));
    }
    let dt = top(store, n)?;
    let mut best: Option<BoundValue> = None;
    for profile in profiles {
        let b = chief_factor_bound(profile, n, ctx, dt.clone())?;
        if best.as_ref().map_or(true, |cur| b.value > cur.value) {
            best = Some(b);
        }
    }
    let bound = best.expect("nonempty profile list");
    Ok(CaseBound::new(CaseKind::ChiefFactors, Some(m), Some(n), bound))
}

/// `n floor(log m) + dt(n)`.
pub fn block_count_case(d: u64, m: u64, n: u64, store: &DegreeStore) -> Result<CaseBound, EngineError> {
    check_split(d, m, n)?;
    let count = n * log2_floor(m);
    let bound =
        BoundValue::new(count, Rule::PrimitiveNonabelianLength, format!("{n} * floor(log {m})")).plus(top(store, n)?);
    Ok(CaseBound::new(CaseKind::BlockCount, Some(m), Some(n), bound))
}

/// Blocks of size 2: `D(n,2) + dt(n)` with `D` chosen by `ctx`.
pub fn two_block_case(d: u64, ctx: SolubilityContext, store: &DegreeStore) -> Result<CaseBound, EngineError> {
    if d % 2 != 0 {
        return Err(EngineError::BadFactorization { d, m: 2, n: d / 2 });
    }
    let n = d / 2;
    check_split(d, 2, n)?;
    let c2 = profiles_of_degree(2)[0];
    let bound = chief_factor_bound(c2, n, ctx, top(store, n)?)?;
    let kind = match ctx {
        SolubilityContext::SolubleTransitive => CaseKind::TwoBlockSoluble,
        SolubilityContext::General => CaseKind::TwoBlock,
    };
    Ok(CaseBound::new(kind, Some(2), Some(n), bound))
}

/// Mersenne-orbit bound with `a = 1` and `d(S) <= dt(d/2)`, taking the
/// larger of the sums starting at `k = 0` and `k = 1`.
pub fn mersenne_case_bound(d: u64, triple: &MersenneTriple, store: &DegreeStore) -> Result<CaseBound, EngineError> {
    let n = d / 2;
    let expected = 3u64.checked_shl(triple.m()).filter(|&v| v >> triple.m() == 3);
    if d % 2 != 0 || expected != Some(n) {
        return Err(EngineError::InvalidTriple(format!("{triple} does not match degree {d}")));
    }
    let dt = top(store, n)?;
    let from_zero = mersenne_chain_bound(1, triple, SumStart::Zero, dt.clone())?;
    let from_one = mersenne_chain_bound(1, triple, SumStart::One, dt)?;
    let bound = if from_one.value > from_zero.value { from_one } else { from_zero };
    let mut case = CaseBound::new(CaseKind::MersenneOrbits, Some(2), Some(n), bound);
    case.triple = Some((triple.e, triple.r, triple.t));
    Ok(case)
}

/// Splits `d = 2^k v` with `v` in `{5, 15}`.
pub fn exceptional_shape(d: u64) -> Option<(u32, u64)> {
    let k = d.trailing_zeros();
    let v = d >> k;
    matches!(v, 5 | 15).then_some((k, v))
}

/// Best bound for a transitive group of degree `big_d` that has no blocks of
/// size 2: the worst of the primitive bound and the imprimitive bounds for
/// block sizes `3 <= r <= 16` with chief factor data.
pub fn best_without_two_blocks(big_d: u64, store: &DegreeStore) -> Result<CaseBound, EngineError> {
    let mut best = primitive_case(big_d)?;
    let mut best_value = best.value()?;
    for r in divisors(big_d) {
        if r < 3 || r == big_d || r > MAX_PROFILED_BLOCK || (r != 4 && profiles_of_degree(r).is_empty()) {
            continue;
        }
        let case = imprimitive_case_bound(big_d, r, big_d / r, SolubilityContext::General, store)?;
        let v = case.value()?;
        if v > best_value {
            best_value = v;
            best = case;
        }
    }
    Ok(best)
}

/// `sum_{i=1..f_G} E(2^(k-i) v, 2) + d(S~)`, where `S~` has degree
/// `2^(k-f_G) v` and is bounded by [`best_without_two_blocks`].
pub fn exceptional_bound(d: u64, f_g: u32, store: &DegreeStore) -> Result<CaseBound, EngineError> {
    let (k, v) = exceptional_shape(d)
        .ok_or_else(|| EngineError::InvalidExceptional(format!("{d} is not 2^k * 5 or 2^k * 15")))?;
    if f_g > k {
        return Err(EngineError::InvalidExceptional(format!("f_G = {f_g} exceeds k = {k}")));
    }
    let mut sum = BoundValue::new(0u64, Rule::ChiefFactors, format!("{f_g} successive 2-block quotients"));
    for i in 1..=f_g {
        sum = sum.plus(e_bound(v << (k - i), 2)?);
    }
    let rest = best_without_two_blocks(v << (k - f_g), store)?;
    chain_case(d, f_g, sum, &rest)
}

pub(crate) fn chain_case(d: u64, f_g: u32, sum: BoundValue, rest: &CaseBound) -> Result<CaseBound, EngineError> {
    let (k, v) = exceptional_shape(d).expect("checked by caller");
    let rest_value = rest.value()?;
    let detail = format!(
        "d(S~) <= {rest_value} via {:?} (block size {}) at degree {}",
        rest.kind,
        rest.m.map_or("none".to_string(), |m| m.to_string()),
        v << (k - f_g)
    );
    let bound = sum.plus(BoundValue::given(rest_value, "d(S~)").noted(Rule::TopGroup, detail)).floored();
    let mut case = CaseBound::new(CaseKind::TwoBlockChain, Some(2), Some(d / 2), bound);
    case.f_g = Some(f_g);
    Ok(case)
}

/// Outcome of comparing one case value with its target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseStatus {
    Pass,
    Fail,
    /// Not decidable without external `as(m)` data.
    Skipped,
}

/// One row of a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseEvaluation {
    pub kind: CaseKind,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub triple: Option<(u32, u32, u32)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub f_g: Option<u32>,
    pub value: Option<u64>,
    pub target: u64,
    pub status: CaseStatus,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub note: String,
    pub trace: Vec<Step>,
}

impl CaseEvaluation {
    pub fn checked(case: CaseBound, target: u64) -> Result<Self, EngineError> {
        let value = case.value()?;
        let status = if value <= target { CaseStatus::Pass } else { CaseStatus::Fail };
        Ok(Self::from_case(case, Some(value), target, status, String::new()))
    }

    pub(crate) fn from_case(
        case: CaseBound,
        value: Option<u64>,
        target: u64,
        status: CaseStatus,
        note: String,
    ) -> Self {
        Self {
            kind: case.kind,
            m: case.m,
            n: case.n,
            triple: case.triple,
            f_g: case.f_g,
            value,
            target,
            status,
            note,
            trace: case.bound.trace,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let store = DegreeStore::new();
        let case = imprimitive_case_bound(48, 4, 12, SolubilityContext::General, &store).unwrap();
        assert_eq!((case.kind, case.value().unwrap()), (CaseKind::S4Core, 16));
        let case = imprimitive_case_bound(96, 48, 2, SolubilityContext::General, &store).unwrap();
        assert_eq!((case.kind, case.value().unwrap()), (CaseKind::BlockCount, 11));
        let case =
            imprimitive_case_bound(SIMPLE_BLOCKS_24_DEGREE, 24, 131_072, SolubilityContext::General, &store).unwrap();
        assert_eq!((case.kind, case.value().unwrap()), (CaseKind::SimpleBlocks24, 52_895));
        assert!(imprimitive_case_bound(48, 4, 13, SolubilityContext::General, &store).is_err());
        assert!(matches!(
            imprimitive_case_bound(100, 10, 10, SolubilityContext::General, &store),
            Err(EngineError::NoProfileData(10))
        ));
    }

    #[test]
    fn two_block_and_primitive() {
        let store = DegreeStore::new();
        // E(12,2) + dt(12) = 4 + 4
        assert_eq!(two_block_case(24, SolubilityContext::General, &store).unwrap().value().unwrap(), 8);
        assert_eq!(primitive_case(3).unwrap().value().unwrap(), 2);
        assert_eq!(primitive_case(48).unwrap().value().unwrap(), 5);
    }

    #[test]
    fn mersenne_requires_matching_degree() {
        let store = DegreeStore::new();
        let t = MersenneTriple::new(5, 1, 0).unwrap();
        // 2^0 * 2^1 + dt(96), dt(96) generic here.
        let case = mersenne_case_bound(192, &t, &store).unwrap();
        assert_eq!(case.value().unwrap(), 2 + generic_bound(96).unwrap());
        assert!(mersenne_case_bound(384, &t, &store).is_err());
    }

    #[test]
    fn exceptional_chain() {
        let store = DegreeStore::new();
        assert_eq!(exceptional_shape(40), Some((3, 5)));
        assert_eq!(exceptional_shape(60), Some((2, 15)));
        assert_eq!(exceptional_shape(48), None);
        // f_G = k leaves a primitive group of degree 5.
        let full = exceptional_bound(40, 3, &store).unwrap();
        // E(20,2) + E(10,2) + E(5,2) + floor(log 5) = 4 + 2 + 1 + 2
        assert_eq!(full.value().unwrap(), 9);
        assert!(exceptional_bound(40, 4, &store).is_err());
        assert!(exceptional_bound(48, 0, &store).is_err());
    }
}
