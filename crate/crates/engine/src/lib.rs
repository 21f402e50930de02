//! Replays the induction behind the bound `d(G) <= floor(c d / sqrt(log d))`
//! for transitive groups of degree `d`: per-degree certificates, and
//! regeneration of the tables of exceptional degrees.

mod as_data;
mod cases;
mod certify;
mod regen;
mod store;
mod tables;

pub use as_data::{AsData, AS_DATA_RANGE};
pub use cases::{
    best_without_two_blocks, block_count_case, exceptional_bound, exceptional_shape, imprimitive_case_bound,
    mersenne_case_bound, primitive_case, two_block_case, CaseBound, CaseEvaluation, CaseKind, CaseStatus,
    MAX_PROFILED_BLOCK, SIMPLE_BLOCKS_24_DEGREE,
};
pub use certify::{certify, Certificate, Verdict, CLOSED_FORM_MIN_BLOCK};
pub use regen::{
    compare_table62, regenerate, table61_cases, table_a3_cases, threshold_and_value, Direction, Discrepancy,
    DiscrepancyField, Regeneration, Table61Row, Table62Row, TableA3Row,
};
pub use store::{generic_bound, DegreeClass, DegreeExpr, DegreeRecord, DegreeStore};
pub use tables::{
    printed_table61, printed_table62, printed_table_a3, table_a1, EmbeddedTable, PrintedA3Row, PrintedTriples,
    EMBEDDED_TABLES, TABLE_61, TABLE_62, TABLE_A1, TABLE_A2, TABLE_A3,
};

#[derive(Debug, thiserror::Error)]
pub enum EngineError {
    #[error(transparent)]
    Bounds(#[from] transgen_bounds::BoundsError),
    #[error(transparent)]
    Xreal(#[from] transgen_xreal::XrealError),
    #[error(transparent)]
    Numth(#[from] transgen_numth::NumthError),
    #[error(transparent)]
    Mersenne(#[from] transgen_mersenne::MersenneError),
    #[error("as(m) data: {0}")]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("{m} * {n} is not a valid block decomposition of {d}")]
    BadFactorization { d: u64, m: u64, n: u64 },
    #[error("no chief factor data for primitive groups of degree {0}")]
    NoProfileData(u64),
    #[error("invalid triple: {0}")]
    InvalidTriple(String),
    #[error("invalid exceptional degree: {0}")]
    InvalidExceptional(String),
    #[error("degree {degree} added after {last}; the store grows in increasing degree")]
    OutOfOrder { degree: u64, last: u64 },
    #[error("{0}")]
    OutOfRange(String),
    #[error("as(m) data: {0}")]
    AsData(String),
}

/// Regenerated tables plus optional `as(m)` data, ready to certify degrees.
#[derive(Debug, Clone)]
pub struct Engine {
    regeneration: Regeneration,
    as_data: Option<AsData>,
}

impl Engine {
    pub fn new() -> Result<Self, EngineError> {
        Ok(Self { regeneration: regenerate()?, as_data: None })
    }

    pub fn with_as_data(mut self, data: AsData) -> Self {
        self.as_data = Some(data);
        self
    }

    pub fn as_data(&self) -> Option<&AsData> {
        self.as_data.as_ref()
    }

    pub fn store(&self) -> &DegreeStore {
        &self.regeneration.store
    }

    pub fn table61(&self) -> &[Table61Row] {
        &self.regeneration.table61
    }

    pub fn table_a3(&self) -> &[TableA3Row] {
        &self.regeneration.table_a3
    }

    pub fn discrepancies(&self) -> Vec<Discrepancy> {
        self.regeneration.discrepancies()
    }

    pub fn dt_upper(&self, n: u64) -> Result<u64, EngineError> {
        self.store().dt_upper(n)
    }

    pub fn certify(&self, d: u64) -> Result<Certificate, EngineError> {
        certify(d, self.store(), self.as_data.as_ref())
    }
}
