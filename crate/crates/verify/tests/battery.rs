//! The battery itself must pass end to end, reproduce bit-identically for a
//! fixed seed, and be insensitive to the worker count in rational mode.

use ncdet_verify::{run_all, Scale};

#[test]
fn small_battery_is_green() {
    let report = run_all(Scale::Small, 42, 1);
    assert!(report.all_passed(), "{report}");
    assert!(report.suites.len() >= 12, "only {} suites", report.suites.len());
}

#[test]
fn battery_is_deterministic_and_worker_independent() {
    let a = run_all(Scale::Small, 7, 1);
    let b = run_all(Scale::Small, 7, 1);
    assert_eq!(a.to_string(), b.to_string());
    let c = run_all(Scale::Small, 7, 4);
    assert_eq!(a.to_string(), c.to_string());
    // A different seed draws different instances but stays green.
    let d = run_all(Scale::Small, 8, 1);
    assert!(d.all_passed(), "{d}");
}
