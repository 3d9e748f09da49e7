use mzvlab::catalog::{catalog, list_identities, params, run_suite, verify, ParamValue, Status};
use mzvlab::{Error, PrecisionConfig};

#[test]
fn every_counted_entry_passes_on_its_grid() {
    let reports = run_suite(None, &PrecisionConfig::default());
    let total: usize = catalog().iter().map(|e| e.grid().len()).sum();
    assert_eq!(reports.len(), total);
    let failed: Vec<_> = reports
        .iter()
        .filter(|r| r.counts() && !r.passed)
        .map(|r| format!("{} {:?}: {}", r.id, r.params, r.error.clone().unwrap_or(r.abs_diff.clone())))
        .collect();
    assert!(failed.is_empty(), "{failed:#?}");
    // the report order is the catalog order
    let ids: Vec<_> = reports.iter().map(|r| r.id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn reports_are_reproducible() {
    let cfg = PrecisionConfig::default();
    let strip = |f: &str| -> Vec<String> {
        run_suite(Some(f), &cfg)
            .into_iter()
            .map(|r| format!("{}|{}|{}|{}|{}|{}", r.id, r.lhs, r.rhs, r.abs_diff, r.bound, r.terms_used))
            .collect()
    };
    for f in ["GOLD-*", "EQ3.5", "CON-ZB"] {
        assert_eq!(strip(f), strip(f));
    }
}

#[test]
fn pass_flag_follows_the_rule() {
    for r in run_suite(Some("STAR"), &PrecisionConfig::default()) {
        let tol: f64 = r.tolerance.parse().unwrap();
        let bound: f64 = r.bound.parse().unwrap();
        assert_eq!(r.passed, r.abs_diff_f64 <= tol.max(bound), "{}", r.id);
    }
}

#[test]
fn conjectures_never_count() {
    let reports = run_suite(Some("CON-*"), &PrecisionConfig::default());
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| r.status == Status::Conjecture && !r.counts()));
}

#[test]
fn single_verifications() {
    let cfg = PrecisionConfig::default();
    let r = verify("EQ3.5", &params([("m", ParamValue::List(vec![2])), ("p", ParamValue::Int(1))]), &cfg)
        .unwrap();
    assert!(r.passed, "{r:?}");
    assert!(matches!(verify("NOPE", &Default::default(), &cfg), Err(Error::UnknownIdentity(_))));
    assert!(list_identities(Some("no-such-prefix")).is_empty());
    assert_eq!(list_identities(Some("GOLD-*")).len(), 2);
}
