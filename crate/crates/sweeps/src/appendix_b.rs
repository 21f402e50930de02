//! Closed-form inequalities for imprimitive groups with minimal block size
//! `m <= 9`, each claimed for all `n` from a stated threshold on.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Pow;
use rayon::prelude::*;
use transgen_xreal::{certified_le, ConstantId, RealExpr};

use crate::plan::{big_grid, ScanPlan};
use crate::{SweepError, SweepReport};

/// Boundary between the finite `q`-sweep and the analytic cases for `m = 2`.
pub fn m2_analytic_threshold() -> BigUint {
    BigUint::from(10u32).pow(66u32)
}

/// Left-hand sides, each without the `c n / sqrt(log n)` term for `d(S)`,
/// which every sub-case adds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Shape {
    /// `k * n / (c' log n)` with `k = num/den`, plus `extra`.
    PrimeCount { num: i64, den: i64, extra: i64 },
    /// `k * b * sqrt(s) * n / sqrt(log n) + j * n^e` with `s = s_num/s_den`
    /// and `e = e_num/e_den`.
    SylowPart { k: i64, s_num: i64, s_den: i64, j: i64, e_num: i64, e_den: i64 },
    /// `k * b1 * n / sqrt(log n) + extra`.
    Soluble { k: i64, extra: i64 },
    /// `n / 19`.
    LargePrimePower,
}

/// One displayed inequality `lhs(n) <= m c n / sqrt(log(m n))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubCase {
    pub m: u64,
    pub label: &'static str,
    /// Claimed start of validity; `None` for the `m = 2` cases at `10^66`.
    pub threshold: Option<u64>,
    shape: Shape,
}

impl SubCase {
    pub fn id(&self) -> String {
        format!("appendix-b/m{}/{}", self.m, self.label)
    }

    /// `lhs(n)`, including the `c n / sqrt(log n)` term.
    pub fn lhs(&self, n: RealExpr) -> RealExpr {
        let sqrt_log = || n.clone().log2().sqrt();
        let main = match self.shape {
            Shape::PrimeCount { num, den, extra } => {
                RealExpr::ratio(num, den) * n.clone() / (RealExpr::constant(ConstantId::CPrime) * n.clone().log2())
                    + RealExpr::int(extra)
            }
            Shape::SylowPart { k, s_num, s_den, j, e_num, e_den } => {
                RealExpr::int(k) * ConstantId::B * RealExpr::ratio(s_num, s_den).sqrt() * n.clone() / sqrt_log()
                    + RealExpr::int(j) * n.clone().pow(BigRational::new(e_num.into(), e_den.into()))
            }
            Shape::Soluble { k, extra } => {
                RealExpr::int(k) * ConstantId::B1 * n.clone() / sqrt_log() + RealExpr::int(extra)
            }
            Shape::LargePrimePower => n.clone() / 19,
        };
        main + RealExpr::constant(ConstantId::C) * n.clone() / sqrt_log()
    }

    pub fn rhs(&self, n: RealExpr) -> RealExpr {
        RealExpr::int(self.m) * ConstantId::C * n.clone() / (RealExpr::int(self.m) * n).log2().sqrt()
    }

    pub fn rhs_text(&self) -> String {
        format!("{m}*c*n/sqrt(log2({m}*n))", m = self.m)
    }

    pub fn holds_at(&self, n: impl Into<RealExpr>) -> Result<bool, SweepError> {
        let n = n.into();
        Ok(certified_le(&self.lhs(n.clone()), &self.rhs(n))?)
    }

    pub fn lhs_text(&self) -> String {
        let tail = "c*n/sqrt(log2 n)";
        match self.shape {
            Shape::PrimeCount { num, den, extra } => {
                let k = if den == 1 { num.to_string() } else { format!("({num}/{den})") };
                let extra = if extra == 0 { String::new() } else { format!("{extra} + ") };
                format!("{extra}{k}*n/(c'*log2 n) + {tail}")
            }
            Shape::SylowPart { k, s_num, s_den, j, e_num, e_den } => {
                let k = if k == 1 { String::new() } else { format!("{k}*") };
                let j = if j == 1 { String::new() } else { format!("{j}*") };
                format!("{k}b*sqrt({s_num}/{s_den})*n/sqrt(log2 n) + {j}n^({e_num}/{e_den}) + {tail}")
            }
            Shape::Soluble { k, extra } => {
                let k = if k == 1 { String::new() } else { format!("{k}*") };
                let extra = if extra == 0 { String::new() } else { format!(" + {extra}") };
                format!("{k}b1*n/sqrt(log2 n){extra} + {tail}")
            }
            Shape::LargePrimePower => format!("n/19 + {tail}"),
        }
    }
}

const fn sylow(m: u64, label: &'static str, n0: u64, k: i64, s: (i64, i64), j: i64, e: (i64, i64)) -> SubCase {
    SubCase {
        m,
        label,
        threshold: Some(n0),
        shape: Shape::SylowPart { k, s_num: s.0, s_den: s.1, j, e_num: e.0, e_den: e.1 },
    }
}

const fn count(m: u64, label: &'static str, n0: u64, num: i64, den: i64, extra: i64) -> SubCase {
    SubCase { m, label, threshold: Some(n0), shape: Shape::PrimeCount { num, den, extra } }
}

/// Every sub-case with an integer threshold, for `m = 3..=9`.
pub const THRESHOLD_CASES: &[SubCase] = &[
    count(3, "i", 3824, 3, 1, 0),
    sylow(3, "ii", 5578, 1, (3, 1), 1, (1, 2)),
    count(4, "i", 115_063, 300, 55, 1),
    sylow(4, "ii", 82_517, 2, (100, 45), 1, (55, 100)),
    sylow(4, "iii", 44, 1, (100, 45), 2, (55, 100)),
    count(5, "i", 553, 5, 1, 0),
    sylow(5, "ii", 139, 2, (5, 2), 1, (3, 5)),
    sylow(5, "iii", 17, 1, (5, 2), 2, (3, 5)),
    SubCase { m: 6, label: "soluble", threshold: Some(2), shape: Shape::Soluble { k: 1, extra: 1 } },
    SubCase { m: 7, label: "soluble", threshold: Some(7), shape: Shape::Soluble { k: 3, extra: 0 } },
    count(8, "i", 273, 500, 63, 0),
    sylow(8, "ii", 98, 3, (100, 37), 2, (63, 100)),
    sylow(8, "iii", 27, 2, (100, 37), 3, (63, 100)),
    count(9, "i", 2336, 700, 63, 0),
    sylow(9, "ii", 1197, 4, (100, 37), 3, (63, 100)),
    sylow(9, "iii", 148, 3, (100, 37), 4, (63, 100)),
];

/// The `m = 2` cases for `n >= 10^66`.
pub const M2_ANALYTIC_CASES: &[SubCase] = &[
    SubCase {
        m: 2,
        label: "i",
        threshold: None,
        shape: Shape::SylowPart { k: 1, s_num: 1000, s_den: 858, j: 0, e_num: 1, e_den: 1 },
    },
    SubCase { m: 2, label: "ii", threshold: None, shape: Shape::PrimeCount { num: 1000, den: 858, extra: 0 } },
];

/// The `m = 2`, `lpp(q) >= 19` case, claimed for every `n < 10^66`.
pub const M2_LARGE_PRIME_POWER: SubCase =
    SubCase { m: 2, label: "lpp19", threshold: Some(2), shape: Shape::LargePrimePower };

pub fn sub_cases(m: u64) -> Vec<SubCase> {
    if m == 2 {
        let mut v = M2_ANALYTIC_CASES.to_vec();
        v.push(M2_LARGE_PRIME_POWER);
        return v;
    }
    THRESHOLD_CASES.iter().copied().filter(|c| c.m == m).collect()
}

/// Checks every sub-case for block size `m` according to `plan`.
pub fn sweep_appendix_b(m: u64, plan: &ScanPlan) -> Result<Vec<SweepReport>, SweepError> {
    if !(2..=9).contains(&m) {
        return Err(SweepError::OutOfRange(format!("block size {m} not in 2..=9")));
    }
    sub_cases(m).iter().map(|case| sweep_case(case, plan)).collect()
}

/// Checks one sub-case. Integer thresholds get the window plus geometric
/// scan; the `10^66` cases get a decade grid above the boundary; the
/// `lpp >= 19` case gets a geometric grid across `[2, 10^66)`.
pub fn sweep_case(case: &SubCase, plan: &ScanPlan) -> Result<SweepReport, SweepError> {
    let mut report = SweepReport::new(case.id(), case.lhs_text(), case.rhs_text());
    match (case.threshold, case.shape) {
        (Some(_), Shape::LargePrimePower) => {
            let points = below_boundary_grid();
            let held = check_big(case, &points)?;
            report.record(points.iter().zip(held));
            report.threshold = Some("2".into());
            report.note = format!("geometric grid on [2, 10^66), {} points", points.len());
        }
        (Some(n0), _) => {
            let points = plan.points(n0);
            let held = check_u64(case, &points)?;
            report.record(points.iter().zip(held));
            report.threshold = Some(n0.to_string());
            let probe = plan.probe(n0, 2);
            if !probe.is_empty() {
                let held = check_u64(case, &probe)?;
                report.failure_below_threshold = probe.iter().zip(held).find(|(_, ok)| !ok).map(|(n, _)| n.to_string());
            }
        }
        (None, _) => {
            let boundary = m2_analytic_threshold();
            let points = big_grid(&boundary, 200, 64);
            let held = check_big(case, &points)?;
            report.record(points.iter().zip(held));
            report.threshold = Some("10^66".into());
            report.note = format!("boundary 10^66 plus {} grid points up to 10^266", points.len() - 1);
        }
    }
    Ok(report)
}

fn check_u64(case: &SubCase, points: &[u64]) -> Result<Vec<bool>, SweepError> {
    points.par_iter().map(|&n| case.holds_at(n)).collect()
}

fn check_big(case: &SubCase, points: &[BigUint]) -> Result<Vec<bool>, SweepError> {
    points.par_iter().map(|n| case.holds_at(n.clone())).collect()
}

/// `floor(2^(j/4))` for `j >= 4` while below `10^66`, deduplicated.
fn below_boundary_grid() -> Vec<BigUint> {
    let boundary = m2_analytic_threshold();
    let mut out: Vec<BigUint> = Vec::new();
    let mut j = 4u32;
    loop {
        // 2^(j/4) rounded down, computed exactly as the integer fourth root of 2^j.
        let n = (BigUint::from(1u32) << j).nth_root(4);
        if n >= boundary {
            break;
        }
        out.push(n);
        j += 1;
    }
    out.dedup();
    out
}
