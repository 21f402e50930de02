//! Explicit generator bounds for transitive permutation groups.
//!
//! Every bound is returned as a [`BoundValue`]: an exact rational (or `+inf`)
//! together with a trace of the rules that produced it.

mod induced;
mod primitive;
mod profile;
mod value;
mod wreath;

pub use induced::{
    e_bound, e_bound_factored, e_sol_bound, e_sol_bound_factored, induced_module_bound, prime_part_bound, split_bound,
    InducedModuleCase, SPLIT_THRESHOLD,
};
pub use primitive::{f_function, holt_bound, pyber_ab_bound, pyber_nab_bound, PrimitiveGenerators};
pub use profile::{
    primitive_profiles, profiles_of_degree, ChiefFactor, ChiefFactorProfile, PRIMITIVE_PROFILES_SOURCE, PROFILE_DEGREES,
};
pub use value::{Amount, BoundValue, Rule, Step};
pub use wreath::{
    chief_factor_bound, composition_length_bound, mersenne_chain_bound, orbit_refined_bound, prime_split_bound,
    s4_core_bound, CompositionCounts, OrbitForm, OrbitRefinedInput, PrimeSplitCase, SolubilityContext, SumStart,
};

#[derive(Debug, thiserror::Error)]
pub enum BoundsError {
    #[error(transparent)]
    Numth(#[from] transgen_numth::NumthError),
    #[error(transparent)]
    Xreal(#[from] transgen_xreal::XrealError),
    #[error(transparent)]
    Mersenne(#[from] transgen_mersenne::MersenneError),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0}")]
    Domain(String),
    #[error("malformed chief factor profile: {0}")]
    BadProfile(String),
}
