use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use transgen_xreal::{certified_floor, ConstantId, RealExpr};

use crate::tables::table_a1;
use crate::EngineError;

/// `floor(c d / sqrt(log d))`, the bound claimed for every non-exceptional degree.
pub fn generic_bound(d: u64) -> Result<u64, EngineError> {
    if d < 2 {
        return Err(EngineError::OutOfRange(format!("degree {d} is below 2")));
    }
    let expr = RealExpr::constant(ConstantId::C) * d / RealExpr::from(d).log2().sqrt();
    to_u64(certified_floor(&expr)?)
}

pub(crate) fn to_u64(v: num_bigint::BigInt) -> Result<u64, EngineError> {
    u64::try_from(&v).map_err(|_| EngineError::OutOfRange(format!("value {v} does not fit in 64 bits")))
}

/// A degree written as `2^k * v` with `v` odd, e.g. `2^3*5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeExpr(pub u64);

impl fmt::Display for DegreeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.0;
        if d == 0 {
            return write!(f, "0");
        }
        let k = d.trailing_zeros();
        let v = d >> k;
        match (k, v) {
            (0, _) => write!(f, "{v}"),
            (1, 1) => write!(f, "2"),
            (_, 1) => write!(f, "2^{k}"),
            (1, _) => write!(f, "2*{v}"),
            _ => write!(f, "2^{k}*{v}"),
        }
    }
}

/// How the stored bound for a degree was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum DegreeClass {
    /// Degrees `2..=32`, from the embedded table.
    TableA1,
    /// Degrees `2^u * 3` and `2^u` needing a sharper bound than the generic one.
    Table61,
    /// Degrees `2^k * 5` and `2^k * 15`, with the 2-block threshold `f` when one exists.
    TableA3 {
        f: Option<u32>,
    },
    Generic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRecord {
    pub d: u64,
    pub class: DegreeClass,
    pub bound: u64,
}

/// Bounds on `dt(n)` established so far. Records are added in increasing
/// degree so that every lookup relies only on smaller, settled degrees.
#[derive(Debug, Clone, Default)]
pub struct DegreeStore {
    records: BTreeMap<u64, DegreeRecord>,
}

impl DegreeStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, record: DegreeRecord) -> Result<(), EngineError> {
        if let Some((&last, _)) = self.records.last_key_value() {
            if record.d <= last {
                return Err(EngineError::OutOfOrder { degree: record.d, last });
            }
        }
        self.records.insert(record.d, record);
        Ok(())
    }

    pub fn get(&self, d: u64) -> Option<&DegreeRecord> {
        self.records.get(&d)
    }

    pub fn records(&self) -> impl Iterator<Item = &DegreeRecord> {
        self.records.values()
    }

    /// Upper bound for `dt(n)`: the embedded table up to 32, a stored table
    /// value if there is one, and the generic bound otherwise.
    pub fn dt_upper(&self, n: u64) -> Result<u64, EngineError> {
        if n < 2 {
            return Err(EngineError::OutOfRange(format!("degree {n} is below 2")));
        }
        if let Some(&v) = table_a1().get(&n) {
            return Ok(v);
        }
        match self.records.get(&n) {
            Some(r) => Ok(r.bound),
            None => generic_bound(n),
        }
    }

    pub fn class_of(&self, d: u64) -> DegreeClass {
        if table_a1().contains_key(&d) {
            DegreeClass::TableA1
        } else {
            self.records.get(&d).map_or(DegreeClass::Generic, |r| r.class)
        }
    }
}
