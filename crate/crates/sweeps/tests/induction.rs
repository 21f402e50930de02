use std::io::Cursor;

use transgen_engine::{AsData, Engine};
use transgen_sweeps::induction::{sweep_m2_finite, sweep_section6, TwoBlockMode};
use transgen_sweeps::SweepStatus;

#[test]
fn two_block_finite_sweep_matches_an_independent_evaluation() {
    // An mpmath evaluation of the same inequality over all 96 odd parts
    // finds 47 failing (k, q), all with q in {21, 35, 105, 315, 3465}; the
    // smallest failing n is 2^28*105.
    let engine = Engine::new().unwrap();
    let report = sweep_m2_finite(engine.store(), TwoBlockMode::Exhaustive).unwrap();
    assert_eq!(report.status, SweepStatus::Failed);
    assert_eq!(report.failures, 47);
    assert_eq!(report.points, 20_059);
    assert_eq!(report.first_failure.as_deref(), Some("2^28*105"));
}

#[test]
fn block_sizes_from_profiles_pass() {
    let engine = Engine::new().unwrap();
    let sweep = sweep_section6(&engine).unwrap();
    assert_eq!(sweep.missing.len(), 469);
    for report in sweep.reports() {
        assert_eq!(report.status, SweepStatus::Verified, "{report:?}");
    }
    assert_eq!(sweep.fallback.len(), 2);
    assert!(sweep.fallback[0].note.contains("first at Some(72)"));
}

#[test]
fn supplied_lengths_take_precedence() {
    // as(12) = 2 and as(16) = 9 are what the profiles give; a supplied file
    // with the same values changes only the recorded source.
    let data = AsData::from_reader(Cursor::new("m,as\n12,2\n16,9\n")).unwrap();
    let engine = Engine::new().unwrap().with_as_data(data);
    let sweep = sweep_section6(&engine).unwrap();
    assert!(sweep.large_n.note.starts_with("2 block sizes (2 supplied, 0 from profiles)"));
    assert!(sweep.reports().iter().all(|r| r.is_verified()));
}
