//! Regeneration of the exceptional-degree tables, processed in increasing
//! degree so that each row only uses rows already settled.

use std::collections::hash_map::Entry;
use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use transgen_bounds::{e_bound, BoundValue, Rule, SolubilityContext};
use transgen_mersenne::{enumerate_triples, MIN_EXPONENT};
use transgen_numth::divisors;

use crate::cases::{
    best_without_two_blocks, chain_case, exceptional_shape, imprimitive_case_bound, mersenne_case_bound,
    primitive_case, two_block_case, CaseBound, CaseKind,
};
use crate::store::{generic_bound, DegreeClass, DegreeExpr, DegreeRecord, DegreeStore};
use crate::tables::{printed_table61, printed_table62, printed_table_a3};
use crate::EngineError;

/// Every case bound entering the row for a degree `2^u * 3` or `2^u`.
pub fn table61_cases(d: u64, store: &DegreeStore) -> Result<Vec<CaseBound>, EngineError> {
    let mut cases = vec![primitive_case(d)?];
    for m in divisors(d) {
        if m < 2 || m == d {
            continue;
        }
        let n = d / m;
        if m == 2 {
            cases.push(two_block_case(d, SolubilityContext::SolubleTransitive, store)?);
            let u = n.trailing_zeros();
            if n >> u == 3 && u >= MIN_EXPONENT {
                for triple in enumerate_triples(u)? {
                    cases.push(mersenne_case_bound(d, &triple, store)?);
                }
            }
        } else {
            cases.push(imprimitive_case_bound(d, m, n, SolubilityContext::General, store)?);
        }
    }
    Ok(cases)
}

/// The 2-block chain bounds for `f_G = 0..=k` at `d = 2^k v`.
pub fn table_a3_cases(d: u64, store: &DegreeStore) -> Result<Vec<CaseBound>, EngineError> {
    chain_cases(d, store, &mut HashMap::new())
}

/// [`table_a3_cases`] reusing bounds for the remaining group `S~` across
/// rows. Valid because rows are processed in increasing degree and `S~` only
/// depends on degrees below its own.
fn chain_cases(
    d: u64,
    store: &DegreeStore,
    rest_cache: &mut HashMap<u64, CaseBound>,
) -> Result<Vec<CaseBound>, EngineError> {
    let (k, v) = exceptional_shape(d)
        .ok_or_else(|| EngineError::InvalidExceptional(format!("{d} is not 2^k * 5 or 2^k * 15")))?;
    let mut cases = Vec::with_capacity(k as usize + 1);
    let mut sum = BoundValue::new(0u64, Rule::ChiefFactors, "successive 2-block quotients");
    for f_g in 0..=k {
        if f_g > 0 {
            sum = sum.plus(e_bound(v << (k - f_g), 2)?);
        }
        let rest_degree = v << (k - f_g);
        if let Entry::Vacant(slot) = rest_cache.entry(rest_degree) {
            slot.insert(best_without_two_blocks(rest_degree, store)?);
        }
        cases.push(chain_case(d, f_g, sum.clone(), &rest_cache[&rest_degree])?);
    }
    Ok(cases)
}

/// `f` and the row value from the chain values indexed by `f_G`: `f` is
/// the least `f_G` whose bound exceeds the generic one, and the value is the
/// largest bound over `f_G >= f` (over all `f_G` when there is no such `f`).
pub fn threshold_and_value(chain: &[u64], generic: u64) -> (Option<u32>, u64) {
    let f = chain.iter().position(|&v| v > generic);
    let from = f.unwrap_or(0);
    let value = chain[from..].iter().copied().max().unwrap_or(0);
    (f.map(|i| i as u32), value)
}

/// Computed against printed values for one degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table61Row {
    pub d: u64,
    pub d_expr: String,
    pub bound: u64,
    pub paper_bound: u64,
    pub delta: i64,
    /// The case attaining the bound.
    pub attained_by: CaseKind,
    pub block_size: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableA3Row {
    pub d: u64,
    pub d_expr: String,
    pub v: u64,
    pub k: u32,
    pub f: Option<u32>,
    pub bound: u64,
    pub paper_f: Option<u32>,
    pub paper_bound: u64,
    pub delta: i64,
    pub generic: u64,
    /// Chain bound for each `f_G = 0..=k`.
    pub chain: Vec<u64>,
}

/// Printed and regenerated triples for one `n = 2^u * 3`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table62Row {
    pub n: u64,
    pub computed: Vec<(u32, u32, u32)>,
    pub printed: Vec<(u32, u32, u32)>,
    pub set_equal: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiscrepancyField {
    Bound,
    Threshold,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    /// Computed bound below the printed one.
    Improvement,
    /// Computed bound above the printed one.
    Excess,
    /// Thresholds differ.
    Differs,
}

/// A regenerated entry that differs from the printed table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub table: String,
    pub d: u64,
    pub d_expr: String,
    pub field: DiscrepancyField,
    pub computed: Option<u64>,
    pub printed: Option<u64>,
    pub direction: Direction,
}

/// Regenerated tables together with the degree store they populate.
#[derive(Debug, Clone)]
pub struct Regeneration {
    pub store: DegreeStore,
    pub table61: Vec<Table61Row>,
    pub table_a3: Vec<TableA3Row>,
}

impl Regeneration {
    pub fn discrepancies(&self) -> Vec<Discrepancy> {
        let mut out = Vec::new();
        let bound_direction = |delta: i64| if delta < 0 { Direction::Improvement } else { Direction::Excess };
        for row in &self.table61 {
            if row.delta != 0 {
                out.push(Discrepancy {
                    table: "6.1".into(),
                    d: row.d,
                    d_expr: row.d_expr.clone(),
                    field: DiscrepancyField::Bound,
                    computed: Some(row.bound),
                    printed: Some(row.paper_bound),
                    direction: bound_direction(row.delta),
                });
            }
        }
        for row in &self.table_a3 {
            if row.f != row.paper_f {
                out.push(Discrepancy {
                    table: "A.3".into(),
                    d: row.d,
                    d_expr: row.d_expr.clone(),
                    field: DiscrepancyField::Threshold,
                    computed: row.f.map(u64::from),
                    printed: row.paper_f.map(u64::from),
                    direction: Direction::Differs,
                });
            }
            if row.delta != 0 {
                out.push(Discrepancy {
                    table: "A.3".into(),
                    d: row.d,
                    d_expr: row.d_expr.clone(),
                    field: DiscrepancyField::Bound,
                    computed: Some(row.bound),
                    printed: Some(row.paper_bound),
                    direction: bound_direction(row.delta),
                });
            }
        }
        out
    }
}

fn worst(cases: &[CaseBound]) -> Result<(u64, &CaseBound), EngineError> {
    let mut best: Option<(u64, &CaseBound)> = None;
    for case in cases {
        let v = case.value()?;
        if best.map_or(true, |(b, _)| v > b) {
            best = Some((v, case));
        }
    }
    best.ok_or_else(|| EngineError::OutOfRange("no cases".into()))
}

/// Regenerates both tables, merging their degrees in increasing order.
pub fn regenerate() -> Result<Regeneration, EngineError> {
    enum Source {
        Table61(u64),
        TableA3(usize),
    }
    let mut degrees: Vec<(u64, Source)> = printed_table61().iter().map(|&(d, p)| (d, Source::Table61(p))).collect();
    degrees.extend(printed_table_a3().iter().enumerate().map(|(i, r)| (r.degree(), Source::TableA3(i))));
    degrees.sort_by_key(|(d, _)| *d);
    let distinct: BTreeSet<u64> = degrees.iter().map(|(d, _)| *d).collect();
    if distinct.len() != degrees.len() {
        return Err(EngineError::OutOfRange("a degree appears in two tables".into()));
    }

    let mut store = DegreeStore::new();
    let mut table61 = Vec::new();
    let mut table_a3 = Vec::new();
    let mut rest_cache = HashMap::new();
    for (d, source) in degrees {
        match source {
            Source::Table61(printed) => {
                let cases = table61_cases(d, &store)?;
                let (bound, case) = worst(&cases)?;
                table61.push(Table61Row {
                    d,
                    d_expr: DegreeExpr(d).to_string(),
                    bound,
                    paper_bound: printed,
                    delta: bound as i64 - printed as i64,
                    attained_by: case.kind,
                    block_size: case.m,
                });
                store.insert(DegreeRecord { d, class: DegreeClass::Table61, bound })?;
            }
            Source::TableA3(i) => {
                let printed = printed_table_a3()[i];
                let generic = generic_bound(d)?;
                let chain = chain_cases(d, &store, &mut rest_cache)?
                    .iter()
                    .map(CaseBound::value)
                    .collect::<Result<Vec<_>, _>>()?;
                let (f, bound) = threshold_and_value(&chain, generic);
                table_a3.push(TableA3Row {
                    d,
                    d_expr: DegreeExpr(d).to_string(),
                    v: printed.v,
                    k: printed.k,
                    f,
                    bound,
                    paper_f: printed.f,
                    paper_bound: printed.bound,
                    delta: bound as i64 - printed.bound as i64,
                    generic,
                    chain,
                });
                store.insert(DegreeRecord { d, class: DegreeClass::TableA3 { f }, bound })?;
            }
        }
    }
    Ok(Regeneration { store, table61, table_a3 })
}

/// Regenerates the admissible `(e, r, t)` triples for each printed `n`.
pub fn compare_table62() -> Result<Vec<Table62Row>, EngineError> {
    printed_table62()
        .iter()
        .map(|(n, printed)| {
            let u = n.trailing_zeros();
            let computed: Vec<(u32, u32, u32)> =
                if n >> u == 3 { enumerate_triples(u)?.iter().map(|t| (t.e, t.r, t.t)).collect() } else { Vec::new() };
            let a: BTreeSet<_> = computed.iter().collect();
            let b: BTreeSet<_> = printed.iter().collect();
            let set_equal = a == b && a.len() == computed.len() && b.len() == printed.len();
            Ok(Table62Row { n: *n, computed, printed: printed.clone(), set_equal })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn threshold_rule() {
        assert_eq!(threshold_and_value(&[3, 9, 4], 10), (None, 9));
        assert_eq!(threshold_and_value(&[3, 9, 12, 11], 10), (Some(2), 12));
        assert_eq!(threshold_and_value(&[3, 11, 4, 12], 10), (Some(1), 12));
        assert_eq!(threshold_and_value(&[20, 4], 10), (Some(0), 20));
    }

    #[test]
    fn first_rows() {
        let store = DegreeStore::new();
        let cases = table61_cases(48, &store).unwrap();
        assert_eq!(worst(&cases).unwrap().0, 16);
    }
}
