use num_bigint::BigUint;
use num_traits::One;

/// Which integers a threshold sweep visits: every integer in
/// `[n0, n0 + window]`, then a geometric progression up to `geometric_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanPlan {
    pub window: u64,
    pub geometric_max: u64,
    /// The geometric step multiplies by roughly `1 + 1/ratio_denominator`.
    pub ratio_denominator: u64,
    /// How many integers below the threshold to probe for failures.
    pub probe_below: u64,
}

impl Default for ScanPlan {
    fn default() -> Self {
        Self { window: 100_000, geometric_max: 1_000_000_000, ratio_denominator: 16, probe_below: 0 }
    }
}

impl ScanPlan {
    pub fn points(&self, n0: u64) -> Vec<u64> {
        let end = n0.saturating_add(self.window);
        let mut out: Vec<u64> = (n0..=end).collect();
        let mut x = end;
        while x < self.geometric_max {
            x = x.saturating_add((x / self.ratio_denominator).max(1)).min(self.geometric_max);
            out.push(x);
        }
        out
    }

    pub fn probe(&self, n0: u64, lowest: u64) -> Vec<u64> {
        let lo = n0.saturating_sub(self.probe_below).max(lowest);
        (lo..n0).rev().collect()
    }
}

/// `start * 10^j` for `j = 0..=decades` followed by the integers
/// `start * (1 + i/steps)` for `i = 1..steps`, sorted; used above `u64`.
pub fn big_grid(start: &BigUint, decades: u32, steps: u64) -> Vec<BigUint> {
    let mut out = Vec::new();
    let mut p = BigUint::one();
    for _ in 0..=decades {
        out.push(start * &p);
        p *= 10u32;
    }
    for i in 1..steps {
        out.push(start * (steps + i) / steps);
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plan_shape() {
        let plan = ScanPlan { window: 10, geometric_max: 100, ratio_denominator: 2, probe_below: 3 };
        let pts = plan.points(5);
        assert_eq!(&pts[..11], &(5..=15).collect::<Vec<_>>()[..]);
        assert_eq!(*pts.last().unwrap(), 100);
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(plan.probe(5, 2), vec![4, 3, 2]);
        assert_eq!(plan.probe(3, 2), vec![2]);
    }

    #[test]
    fn big_grid_sorted() {
        let g = big_grid(&BigUint::from(100u32), 2, 4);
        let shown: Vec<String> = g.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["100", "125", "150", "175", "1000", "10000"]);
    }
}
