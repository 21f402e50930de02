use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::{Interval, RealExpr, XrealError};

/// The named real constants appearing in the bound formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConstantId {
    /// `sqrt(2/pi)`.
    B,
    /// `sqrt(2) * b`.
    B1,
    /// `sqrt(3)/2`.
    C,
    /// `1512660 * sqrt(log2(2^19*15)) / (2^19*15)`.
    C1,
    /// `log_9(48) + log_9(24)/3`.
    C0,
    /// `ln 2 / 1.25506`.
    CPrime,
    /// `2 / c'`.
    B0,
}

impl ConstantId {
    pub const ALL: [ConstantId; 7] = [
        ConstantId::B,
        ConstantId::B1,
        ConstantId::C,
        ConstantId::C1,
        ConstantId::C0,
        ConstantId::CPrime,
        ConstantId::B0,
    ];

    /// Short name used in reports.
    pub fn name(self) -> &'static str {
        match self {
            ConstantId::B => "b",
            ConstantId::B1 => "b1",
            ConstantId::C => "c",
            ConstantId::C1 => "c1",
            ConstantId::C0 => "c0",
            ConstantId::CPrime => "c'",
            ConstantId::B0 => "b0",
        }
    }

    /// The defining expression, in terms of literals and other constants.
    pub fn definition(self) -> RealExpr {
        match self {
            ConstantId::B => (RealExpr::int(2) / RealExpr::Pi).sqrt(),
            ConstantId::B1 => RealExpr::int(2).sqrt() * ConstantId::B,
            ConstantId::C => RealExpr::int(3).sqrt() / 2,
            ConstantId::C1 => {
                let d = RealExpr::int(15i64 << 19);
                RealExpr::int(1_512_660) * d.clone().log2().sqrt() / d
            }
            ConstantId::C0 => RealExpr::int(48).log_base(9) + RealExpr::int(24).log_base(9) / 3,
            ConstantId::CPrime => RealExpr::int(2).ln() / RealExpr::ratio(125_506, 100_000),
            ConstantId::B0 => RealExpr::int(2) / RealExpr::constant(ConstantId::CPrime),
        }
    }

    pub(crate) fn enclosure(self, prec: u32) -> Result<Interval, XrealError> {
        type Cache = Mutex<HashMap<(ConstantId, u32), Interval>>;
        static CACHE: OnceLock<Cache> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(v) = cache.lock().expect("constant cache poisoned").get(&(self, prec)) {
            return Ok(v.clone());
        }
        let v = self.definition().eval(prec)?;
        cache.lock().expect("constant cache poisoned").insert((self, prec), v.clone());
        Ok(v)
    }
}

impl fmt::Display for ConstantId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
