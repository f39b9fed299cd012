use balloon_core::functionals::FunctionalId;
use balloon_core::verifier::{
    audit_initial_coefficients, audit_log_coefficients, audit_theorems, sweep_bound, SweepConfig,
};
use balloon_core::{Extremal, Target, Verdict};

fn coarse() -> SweepConfig {
    SweepConfig { zeta1_points: 9, radial_points: 6, angular_points: 16, ..SweepConfig::default() }
}

#[test]
fn theorem_bounds_are_certified_on_a_coarse_grid() {
    let checks = audit_theorems(&coarse()).unwrap();
    assert_eq!(checks.len(), FunctionalId::NAMED.len());
    for check in &checks {
        assert_eq!(check.verdict, Verdict::Certified, "{}", check.name);
        assert!((check.observed - check.bound.value).abs() <= 1e-12, "{}: {}", check.name, check.observed);
        assert!((check.extremal_value - check.bound.value).abs() <= 1e-12, "{}", check.name);
    }
}

#[test]
fn exact_bound_values() {
    let expected = [
        ("h21", 0.5),
        ("h22", 0.25),
        ("h21-log", 1.0 / 16.0),
        ("h21-invlog", 43.0 / 576.0),
        ("t21", 2.0),
        ("t22", 25.0 / 16.0),
        ("t23", 545.0 / 648.0),
        ("t21-log", 17.0 / 64.0),
        ("t21-invlog", 25.0 / 64.0),
    ];
    for (slug, value) in expected {
        let id = FunctionalId::parse(slug).unwrap();
        assert_eq!(Target::Functional(id).bound().unwrap().value, value, "{slug}");
    }
}

#[test]
fn initial_coefficients_are_certified() {
    let checks = audit_initial_coefficients(&coarse()).unwrap();
    let names: Vec<_> = checks.iter().map(|c| c.name.as_str()).collect();
    assert_eq!(names, ["a2", "a3", "a4", "a5"]);
    for check in &checks {
        assert_eq!(check.verdict, Verdict::Certified, "{}", check.name);
        assert_eq!(check.extremal, Extremal::F1);
    }
}

#[test]
fn third_log_coefficient_exceeds_its_claimed_bound() {
    let checks = audit_log_coefficients(&coarse()).unwrap();
    assert_eq!(checks[0].verdict, Verdict::Certified);
    assert_eq!(checks[1].verdict, Verdict::Certified);
    let gamma3 = &checks[2];
    assert_eq!(gamma3.verdict, Verdict::Violated);
    assert!((gamma3.observed - 1.0 / 6.0).abs() <= 1e-12, "{}", gamma3.observed);
    assert!(gamma3.extremal_value.abs() <= 1e-15);
}

#[test]
fn loose_upper_tolerance_is_rejected() {
    let cfg = SweepConfig { tol_upper: 1e-6, ..coarse() };
    assert!(sweep_bound(&Target::Coefficient(2), &cfg).is_err());
}

#[test]
fn generic_determinants_have_no_claimed_bound() {
    let id = FunctionalId::parse("hankel-a(2,2)").unwrap();
    assert!(sweep_bound(&Target::Functional(id), &coarse()).is_err());
}
