//! Certified real arithmetic.
//!
//! Real-valued expressions are evaluated to dyadic intervals that provably
//! contain the true value. Floors and comparisons escalate the working
//! precision (64, 128, ... bits) until the answer is decided, and report an
//! ambiguity error instead of guessing once the cap is reached. Binary
//! floating point is never used.

mod certify;
mod constants;
mod elem;
mod expr;
mod interval;

pub use certify::{
    certified_cmp, certified_cmp_with_cap, certified_floor, certified_floor_with_cap, certified_le, certified_lt,
    matches_decimal_prefix, matches_rounded_decimal, precision_cap, set_precision_cap, DEFAULT_PRECISION_CAP,
    START_PRECISION,
};
pub use constants::ConstantId;
pub use elem::{exp, ln, ln2, pi};
pub use expr::{RealExpr, Surd};
pub use interval::Interval;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum XrealError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("floor of {expr} undecided at {prec} bits: enclosure {enclosure}")]
    AmbiguousFloor { expr: String, prec: u32, enclosure: String },
    #[error("comparison {lhs} <= {rhs} undecided at {prec} bits")]
    AmbiguousComparison { lhs: String, rhs: String, prec: u32 },
}
