//! Pointwise verification of the analytic inequalities behind the degree
//! bound: the small-block-size threshold claims, the `m = 2` finite sweep,
//! the large-block cases, and a handful of standalone lemma checks.

pub mod appendix_b;
pub mod example62;
pub mod induction;
pub mod lemmas;
mod plan;
mod report;

pub use appendix_b::{sweep_appendix_b, sweep_case, SubCase};
pub use plan::{big_grid, ScanPlan};
pub use report::{SweepReport, SweepStatus};

#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    #[error(transparent)]
    Xreal(#[from] transgen_xreal::XrealError),
    #[error(transparent)]
    Engine(#[from] transgen_engine::EngineError),
    #[error(transparent)]
    Bounds(#[from] transgen_bounds::BoundsError),
    #[error(transparent)]
    Numth(#[from] transgen_numth::NumthError),
    #[error(transparent)]
    Poset(#[from] transgen_poset::PosetError),
    #[error("comparison undecided at working precision: {0}")]
    Undecided(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
}
