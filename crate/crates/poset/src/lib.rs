//! Finite posets that arise as divisor lattices, i.e. cartesian products of
//! chains, together with independent width oracles used to cross-check the
//! rank-level formula for the largest antichain.

mod chains;
mod finite;
mod matching;

pub use chains::{ChainProduct, ORACLE_LIMIT};
pub use finite::{FinitePoset, EXHAUSTIVE_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PosetError {
    #[error("chain sizes must be at least 1")]
    EmptyChain,
    #[error("poset has {size} elements, above the limit of {limit}")]
    TooLarge { size: u128, limit: u128 },
    #[error("the bound needs at least 2 elements")]
    TooSmall,
    #[error("relation is not a strict partial order: {0}")]
    NotAnOrder(String),
    #[error(transparent)]
    Numth(#[from] transgen_numth::NumthError),
}
