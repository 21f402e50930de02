use std::sync::OnceLock;

use proptest::prelude::*;
use transgen_engine::{generic_bound, CaseStatus, DegreeClass, Engine, Verdict};

fn engine() -> &'static Engine {
    static ENGINE: OnceLock<Engine> = OnceLock::new();
    ENGINE.get_or_init(|| Engine::new().expect("regeneration succeeds"))
}

proptest! {
    #[test]
    fn verdict_summarizes_cases(d in 2u64..=20_000) {
        let cert = engine().certify(d).unwrap();
        let any = |s: CaseStatus| cert.cases.iter().any(|c| c.status == s);
        let expected = if any(CaseStatus::Fail) {
            Verdict::Fail
        } else if any(CaseStatus::Skipped) {
            Verdict::Incomplete
        } else {
            Verdict::Pass
        };
        prop_assert_eq!(cert.verdict, expected);
        for case in cert.cases.iter().filter(|c| c.status == CaseStatus::Pass) {
            prop_assert!(case.value.is_some_and(|v| v <= case.target), "{:?}", case);
        }
        if let Some(w) = cert.worst {
            let top = cert.cases[w].value;
            prop_assert!(cert.cases.iter().all(|c| c.value <= top));
        }
    }

    #[test]
    fn stored_bound_by_class(d in 33u64..=1 << 24) {
        let engine = engine();
        let stored = engine.dt_upper(d).unwrap();
        match engine.store().class_of(d) {
            DegreeClass::Generic => prop_assert_eq!(stored, generic_bound(d).unwrap()),
            DegreeClass::Table61 => {
                let row = engine.table61().iter().find(|r| r.d == d).unwrap();
                prop_assert_eq!(stored, row.bound);
            }
            DegreeClass::TableA3 { f } => {
                let row = engine.table_a3().iter().find(|r| r.d == d).unwrap();
                prop_assert_eq!((stored, f), (row.bound, row.f));
            }
            DegreeClass::TableA1 => prop_assert!(false, "degree {} above the base table", d),
        }
    }

    #[test]
    fn exceptional_degrees_by_class(u in 5u32..=30, v in prop::sample::select(vec![1u64, 3, 5, 15])) {
        let d = v << u;
        prop_assume!(d > 32);
        let class = engine().store().class_of(d);
        let in_tables = engine().table61().iter().any(|r| r.d == d) || engine().table_a3().iter().any(|r| r.d == d);
        prop_assert_eq!(class != DegreeClass::Generic, in_tables);
    }

    #[test]
    fn certificates_are_deterministic(d in 2u64..=8192) {
        let a = serde_json::to_string(&engine().certify(d).unwrap()).unwrap();
        let b = serde_json::to_string(&engine().certify(d).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }
}
