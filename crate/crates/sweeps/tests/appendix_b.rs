use transgen_sweeps::appendix_b::sub_cases;
use transgen_sweeps::{sweep_appendix_b, ScanPlan, SweepStatus};

// The full 10^5 window runs in the acceptance target; a shorter one here.
#[test]
fn every_sub_case_holds_on_a_short_window() {
    let plan = ScanPlan { window: 5_000, probe_below: 0, ..ScanPlan::default() };
    for m in 2..=9 {
        for report in sweep_appendix_b(m, &plan).unwrap() {
            assert_eq!(report.status, SweepStatus::Verified, "{report:?}");
            assert_eq!(report.failures, 0);
        }
    }
}

/// Sub-cases that already hold below their stated threshold, with the
/// least `n` from which they hold.
const CONSERVATIVE: [(&str, u64); 3] =
    [("appendix-b/m3/ii", 431), ("appendix-b/m4/ii", 82_361), ("appendix-b/m4/iii", 38)];

#[test]
fn thresholds_are_sharp_or_known_conservative() {
    for m in 3..=9 {
        for case in sub_cases(m) {
            let n0 = case.threshold.unwrap();
            let id = case.id();
            let start = CONSERVATIVE.iter().find(|(c, _)| *c == id).map_or(n0, |&(_, s)| s);
            if start > 2 {
                assert!(!case.holds_at(start - 1).unwrap(), "{id} holds at {}", start - 1);
            }
            assert!((start..n0).all(|n| case.holds_at(n).unwrap()), "{id} fails in [{start}, {n0})");
        }
    }
}
