use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::BoundsError;

/// Raw text of the embedded chief-factor table, one primitive group per line.
pub const PRIMITIVE_PROFILES_SOURCE: &str = include_str!("../data/primitive_profiles.txt");

/// Degrees covered by the embedded table.
pub const PROFILE_DEGREES: [u64; 10] = [2, 3, 4, 5, 6, 7, 8, 9, 12, 16];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChiefFactor {
    /// Elementary abelian of order `p^a`.
    Abelian { p: u64, a: u32 },
    /// A nonabelian simple group, by name.
    Nonabelian(String),
}

impl ChiefFactor {
    fn parse(token: &str) -> Result<Self, BoundsError> {
        let bad = || BoundsError::BadProfile(format!("chief factor token {token:?}"));
        if token == "A3" {
            return Ok(ChiefFactor::Abelian { p: 3, a: 1 });
        }
        if let Some(rest) = token.strip_prefix('C') {
            let (p, a) = match rest.split_once('^') {
                Some((p, a)) => (p, a.parse().map_err(|_| bad())?),
                None => (rest, 1),
            };
            let p: u64 = p.parse().map_err(|_| bad())?;
            if !transgen_numth::is_prime(p) || a == 0 {
                return Err(bad());
            }
            return Ok(ChiefFactor::Abelian { p, a });
        }
        if token.is_empty() {
            return Err(bad());
        }
        Ok(ChiefFactor::Nonabelian(token.to_owned()))
    }
}

impl fmt::Display for ChiefFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChiefFactor::Abelian { p, a: 1 } => write!(f, "C{p}"),
            ChiefFactor::Abelian { p, a } => write!(f, "C{p}^{a}"),
            ChiefFactor::Nonabelian(name) => f.write_str(name),
        }
    }
}

/// Chief factors of one primitive group `R` of degree `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChiefFactorProfile {
    pub degree: u64,
    pub name: String,
    pub factors: Vec<ChiefFactor>,
}

impl ChiefFactorProfile {
    pub fn new(degree: u64, name: impl Into<String>, factors: Vec<ChiefFactor>) -> Self {
        Self { degree, name: name.into(), factors }
    }

    /// Parses a `degree|group|factor,factor,...` line.
    pub fn parse_line(line: &str) -> Result<Self, BoundsError> {
        let mut parts = line.split('|');
        let (Some(degree), Some(name), Some(factors), None) = (parts.next(), parts.next(), parts.next(), parts.next())
        else {
            return Err(BoundsError::BadProfile(format!("expected degree|group|factors, got {line:?}")));
        };
        let degree = degree.trim().parse().map_err(|_| BoundsError::BadProfile(format!("degree in {line:?}")))?;
        let factors = split_top_level(factors).map(|t| ChiefFactor::parse(t.trim())).collect::<Result<_, _>>()?;
        Ok(Self::new(degree, name.trim(), factors))
    }

    /// `a_(p)`: the number of composition factors of order `p`.
    pub fn a_p(&self, p: u64) -> u32 {
        self.abelian().filter(|&(q, _)| q == p).map(|(_, a)| a).sum()
    }

    /// `(p, a_(p))` for every prime occurring, in increasing `p`.
    pub fn prime_multiplicities(&self) -> Vec<(u64, u32)> {
        let mut by_prime = BTreeMap::new();
        for (p, a) in self.abelian() {
            *by_prime.entry(p).or_insert(0) += a;
        }
        by_prime.into_iter().collect()
    }

    /// Abelian chief factors as `(p, a)` with order `p^a`.
    pub fn abelian(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.factors.iter().filter_map(|f| match f {
            ChiefFactor::Abelian { p, a } => Some((*p, *a)),
            ChiefFactor::Nonabelian(_) => None,
        })
    }

    /// Number of abelian composition factors.
    pub fn a_ab(&self) -> u32 {
        self.abelian().map(|(_, a)| a).sum()
    }

    /// Number of nonabelian chief factors.
    pub fn c_nonab(&self) -> u32 {
        self.factors.iter().filter(|f| matches!(f, ChiefFactor::Nonabelian(_))).count() as u32
    }

    /// Composition length. Every nonabelian chief factor listed is simple.
    pub fn composition_length(&self) -> u32 {
        self.a_ab() + self.c_nonab()
    }

    pub fn is_soluble(&self) -> bool {
        self.c_nonab() == 0
    }
}

impl fmt::Display for ChiefFactorProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (degree {}): ", self.name, self.degree)?;
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

/// Splits on commas outside parentheses, so `PSL(4,2)` stays one token.
fn split_top_level(s: &str) -> impl Iterator<Item = &str> {
    let mut depth = 0i32;
    s.split(move |c| {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        c == ',' && depth == 0
    })
}

/// Every row of the embedded table, in table order.
pub fn primitive_profiles() -> &'static [ChiefFactorProfile] {
    static TABLE: OnceLock<Vec<ChiefFactorProfile>> = OnceLock::new();
    TABLE.get_or_init(|| {
        PRIMITIVE_PROFILES_SOURCE
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| ChiefFactorProfile::parse_line(l).expect("embedded profile table is well formed"))
            .collect()
    })
}

/// Profiles of the primitive groups of degree `m`; empty when `m` is not covered.
pub fn profiles_of_degree(m: u64) -> Vec<&'static ChiefFactorProfile> {
    primitive_profiles().iter().filter(|p| p.degree == m).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_shape() {
        let counts: Vec<usize> = PROFILE_DEGREES.iter().map(|&m| profiles_of_degree(m).len()).collect();
        assert_eq!(counts, vec![1, 2, 2, 5, 4, 7, 7, 11, 6, 22]);
        assert!(profiles_of_degree(10).is_empty());
    }

    #[test]
    fn derived_counts() {
        let s4 = profiles_of_degree(4).into_iter().find(|p| p.name == "S4").unwrap();
        assert_eq!((s4.a_p(2), s4.a_p(3), s4.c_nonab()), (3, 1, 0));
        assert_eq!(s4.composition_length(), 4);
        let agl = profiles_of_degree(5).into_iter().find(|p| p.name == "AGL(1,5)").unwrap();
        assert_eq!(agl.prime_multiplicities(), vec![(2, 2), (5, 1)]);
        let agaml = profiles_of_degree(16).into_iter().find(|p| p.name == "AGammaL(2,4)").unwrap();
        assert_eq!((agaml.a_p(2), agaml.a_p(3), agaml.c_nonab()), (5, 1, 2));
        assert!(!agaml.is_soluble());
    }

    #[test]
    fn rejects_bad_tokens() {
        assert!(ChiefFactorProfile::parse_line("4|X|C4").is_err());
        assert!(ChiefFactorProfile::parse_line("4|X").is_err());
        assert!(ChiefFactorProfile::parse_line("4|X|C2,").is_err());
        assert_eq!(ChiefFactorProfile::parse_line("2|C2|C2").unwrap().to_string(), "C2 (degree 2): C2");
    }
}
