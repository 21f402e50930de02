use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize, Serializer};
use transgen_numth::Rational;

/// A nonnegative bound: an exact rational or `+inf`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Amount {
    Finite(Rational),
    Infinite,
}

impl Amount {
    pub fn int(n: impl Into<BigInt>) -> Self {
        Amount::Finite(Rational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Amount::Finite(Rational::zero())
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Amount::Finite(r) => Some(r),
            Amount::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Amount::Infinite)
    }

    /// Largest integer not above the value; `None` for `+inf`.
    pub fn floor(&self) -> Option<BigInt> {
        self.finite().map(|r| r.floor().to_integer())
    }

    pub fn add(&self, other: &Amount) -> Amount {
        match (self, other) {
            (Amount::Finite(a), Amount::Finite(b)) => Amount::Finite(a + b),
            _ => Amount::Infinite,
        }
    }

    /// Product with the convention `0 * inf = 0`, which is what a zero
    /// multiplicity of an absent chief factor means.
    pub fn mul(&self, other: &Amount) -> Amount {
        match (self, other) {
            (Amount::Finite(a), Amount::Finite(b)) => Amount::Finite(a * b),
            (Amount::Finite(a), Amount::Infinite) | (Amount::Infinite, Amount::Finite(a)) if a.is_zero() => {
                Amount::zero()
            }
            _ => Amount::Infinite,
        }
    }

    pub fn min(self, other: Amount) -> Amount {
        if self <= other {
            self
        } else {
            other
        }
    }
}

impl PartialOrd for Amount {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Amount {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Amount::Finite(a), Amount::Finite(b)) => a.cmp(b),
            (Amount::Finite(_), Amount::Infinite) => Ordering::Less,
            (Amount::Infinite, Amount::Finite(_)) => Ordering::Greater,
            (Amount::Infinite, Amount::Infinite) => Ordering::Equal,
        }
    }
}

impl From<u64> for Amount {
    fn from(n: u64) -> Self {
        Amount::int(n)
    }
}

impl From<BigInt> for Amount {
    fn from(n: BigInt) -> Self {
        Amount::int(n)
    }
}

impl From<Rational> for Amount {
    fn from(r: Rational) -> Self {
        Amount::Finite(r)
    }
}

impl fmt::Display for Amount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Amount::Finite(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Amount::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Amount::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Amount {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The inequality applied at one step of a derivation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// `E(n,p)`: induced modules in general.
    InducedModule,
    /// `E_sol(n,p)`: induced modules with a soluble transitive subgroup.
    InducedModuleSoluble,
    /// `min{a, chi1} n_p` for soluble groups.
    SolubleOrbitCount,
    /// `a * sum E_sol(t_i, p)` over orbits of a soluble subgroup.
    SolubleOrbitSum,
    /// `min{a, chi1} n / n_r` via a Sylow subgroup for a prime `r != p`.
    CoprimeSylow,
    /// `chi * floor(b n / sqrt(log_p n_p))` with a soluble core.
    CoreOrbitCount,
    /// `a * E(n,p)`.
    ModuleDimension,
    /// Closed forms in `n` alone, switching at `n = 1261`.
    PrimePartSplit,
    /// Sum of chief factor contributions plus the top group.
    ChiefFactors,
    /// Orbit structure of minimally transitive groups with `L_2(p)` factors.
    MersenneOrbits,
    /// One chief factor bounded through orbit counts of a subgroup `X`.
    OrbitRefined,
    /// Blocks whose induced group is `A_4` or `S_4`.
    S4Core,
    /// Separate treatment of one prime against all others.
    PrimeSplit,
    /// Bound through the composition length `a(R)` only.
    CompositionLength,
    /// Abelian composition length of a primitive group.
    PrimitiveAbelianLength,
    /// Nonabelian composition length of a primitive group.
    PrimitiveNonabelianLength,
    /// `floor(log m)` generators for subnormal subgroups of primitive groups.
    PrimitiveGeneration,
    /// Generators of the induced group on the block system, supplied by the caller.
    TopGroup,
    /// A certified floor of an irrational expression.
    CertifiedFloor,
}

/// One step of a derivation: the rule used and a summary of its operands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub rule: Rule,
    pub detail: String,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {}", self.rule, self.detail)
    }
}

/// A bound together with the derivation that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundValue {
    pub value: Amount,
    pub trace: Vec<Step>,
}

impl BoundValue {
    pub fn new(value: impl Into<Amount>, rule: Rule, detail: impl Into<String>) -> Self {
        Self { value: value.into(), trace: vec![Step { rule, detail: detail.into() }] }
    }

    /// A caller-supplied quantity such as `d(pi(G))`.
    pub fn given(value: impl Into<Amount>, what: &str) -> Self {
        let value = value.into();
        let detail = format!("{what} = {value}");
        Self::new(value, Rule::TopGroup, detail)
    }

    pub fn floor(&self) -> Option<BigInt> {
        self.value.floor()
    }

    /// Appends a step to the trace and replaces the value.
    pub fn then(mut self, value: Amount, rule: Rule, detail: impl Into<String>) -> Self {
        self.value = value;
        self.trace.push(Step { rule, detail: detail.into() });
        self
    }

    /// Appends a step without changing the value.
    pub fn noted(mut self, rule: Rule, detail: impl Into<String>) -> Self {
        self.trace.push(Step { rule, detail: detail.into() });
        self
    }

    /// Sum of the values; traces are concatenated in order.
    pub fn plus(mut self, other: BoundValue) -> Self {
        self.value = self.value.add(&other.value);
        self.trace.extend(other.trace);
        self
    }

    pub fn scaled(mut self, k: &Amount) -> Self {
        self.value = k.mul(&self.value);
        self
    }

    /// The smaller of two bounds, keeping the trace of the one chosen.
    pub fn min(self, other: BoundValue) -> Self {
        if other.value < self.value {
            other
        } else {
            self
        }
    }

    /// Replaces the value by its floor (no-op on `+inf`).
    pub fn floored(mut self) -> Self {
        if let Some(f) = self.value.floor() {
            self.value = Amount::int(f);
        }
        self
    }

    pub fn is_nonnegative(&self) -> bool {
        self.value.finite().map_or(true, |r| !r.is_negative())
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinite_arithmetic() {
        let inf = Amount::Infinite;
        assert_eq!(Amount::zero().mul(&inf), Amount::zero());
        assert_eq!(Amount::from(2).mul(&inf), inf);
        assert_eq!(Amount::from(3).add(&inf), inf);
        assert_eq!(inf.clone().min(Amount::from(5)), Amount::from(5));
        assert!(Amount::from(1_000_000) < inf);
        assert_eq!(Amount::Finite(Rational::new(9.into(), 2.into())).floor(), Some(4.into()));
        assert_eq!(inf.to_string(), "inf");
        assert_eq!(Amount::Finite(Rational::new(9.into(), 2.into())).to_string(), "9/2");
    }

    #[test]
    fn traces_concatenate() {
        let a = BoundValue::new(2u64, Rule::InducedModule, "E");
        let b = BoundValue::given(3u64, "d(S)");
        let s = a.plus(b);
        assert_eq!(s.value, Amount::from(5));
        assert_eq!(s.trace.len(), 2);
        assert_eq!(s.trace[1].rule, Rule::TopGroup);
    }
}
