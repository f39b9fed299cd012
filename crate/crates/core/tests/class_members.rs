use balloon_core::balloon::{
    a5_from_b, coeffs_from_b, coeffs_from_p, kernel_eval, member_from_function, member_from_schwarz, membership,
    Region, MEMBER_RESIDUAL_TOL,
};
use balloon_core::caratheodory::{p_from_params, p_from_schwarz, schur_chain_series};
use balloon_core::functionals::FunctionalId;
use balloon_core::{
    CaratheodoryPrefix, ClassMember, CoefficientSet, Complex64, PowerSeries, SchwarzFunction, SchwarzParams,
    SchwarzPrefix,
};
use proptest::prelude::*;

const ORDER: usize = 8;
const TOL: f64 = 1e-10;

fn disk_point() -> impl Strategy<Value = Complex64> {
    (0.0f64..=1.0, -std::f64::consts::PI..std::f64::consts::PI).prop_map(|(r, t)| Complex64::from_polar(r.sqrt(), t))
}

fn schur_params() -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec(disk_point(), 1..=5)
}

fn member(params: &[Complex64], order: usize) -> ClassMember {
    member_from_function(&SchwarzFunction::Schur(params.to_vec()), order).unwrap()
}

fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= TOL * (1.0 + a.norm().max(b.norm()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn members_solve_the_defining_equation(params in schur_params()) {
        let m = member(&params, ORDER);
        prop_assert!(m.residual <= MEMBER_RESIDUAL_TOL);
        prop_assert_eq!(m.f[0], Complex64::new(0.0, 0.0));
        prop_assert!(close(m.f[1], Complex64::new(1.0, 0.0)));
    }

    #[test]
    fn log_coefficients_match_series_definition(params in schur_params()) {
        let m = member(&params, ORDER);
        let set = m.coefficient_set().unwrap();
        let log_f = m.f.div_z().log().unwrap();
        for (n, gamma) in set.gamma_stream().into_iter().enumerate().skip(1) {
            prop_assert!(close(gamma, log_f[n] * 0.5), "gamma{} {} vs {}", n, gamma, log_f[n] * 0.5);
        }
    }

    #[test]
    fn inverse_log_coefficients_match_series_definition(params in schur_params()) {
        let m = member(&params, ORDER);
        let set = m.coefficient_set().unwrap();
        let log_inverse = m.f.revert().unwrap().div_z().log().unwrap();
        for (n, big_gamma) in set.big_gamma_stream().into_iter().enumerate().skip(1) {
            prop_assert!(close(big_gamma, log_inverse[n] * 0.5), "Gamma{}", n);
        }
    }

    #[test]
    fn caratheodory_route_agrees_with_series(params in schur_params()) {
        let m = member(&params, ORDER);
        let p = p_from_schwarz(&m.schwarz).unwrap();
        let c = coeffs_from_p(&CaratheodoryPrefix::from_series(&p).unwrap());
        prop_assert!(close(c.a2, m.f[2]));
        prop_assert!(close(c.a3, m.f[3]));
        prop_assert!(close(c.a4, m.f[4]));
        prop_assert!(close(c.a5.unwrap(), m.f[5]));
    }

    #[test]
    fn schwarz_route_agrees_with_series(params in schur_params()) {
        let m = member(&params, ORDER);
        let w = &m.schwarz;
        let a = coeffs_from_b(&SchwarzPrefix::new(w[1], w[2], w[3])).unwrap();
        prop_assert!(close(a[0], m.f[2]));
        prop_assert!(close(a[1], m.f[3]));
        prop_assert!(close(a[2], m.f[4]));
        prop_assert!(close(a5_from_b([w[1], w[2], w[3], w[4]]), m.f[5]));
    }

    #[test]
    fn disk_parameters_match_schur_chain(z1 in disk_point(), z2 in disk_point(), z3 in disk_point()) {
        let p = p_from_params(&SchwarzParams::new(z1, z2, z3).unwrap()).unwrap();
        let series = p_from_schwarz(&schur_chain_series(&[z1, z2, z3], 4)).unwrap();
        prop_assert!(close(p.p1, series[1]));
        prop_assert!(close(p.p2, series[2]));
        prop_assert!(close(p.p3, series[3]));
    }

    #[test]
    fn functionals_agree_across_routes(params in schur_params()) {
        let m = member(&params, ORDER);
        let series_set = m.coefficient_set().unwrap();
        let p = p_from_schwarz(&m.schwarz).unwrap();
        let c = coeffs_from_p(&CaratheodoryPrefix::from_series(&p).unwrap());
        let route_set = balloon_core::balloon::full_coefficient_set(c.a2, c.a3, c.a4, c.a5);
        for id in FunctionalId::NAMED {
            let a = id.evaluate(&series_set).unwrap();
            let b = id.evaluate(&route_set).unwrap();
            prop_assert!(close(a, b), "{}: {} vs {}", id, a, b);
        }
    }

    #[test]
    fn rotation_acts_on_coefficients(params in schur_params(), theta in -3.0f64..3.0) {
        let m = member(&params, ORDER);
        let r = Complex64::from_polar(1.0, theta);
        let rotated_w: Vec<Complex64> =
            m.schwarz.coeffs().iter().enumerate().map(|(k, &b)| b * r.powu(k as u32)).collect();
        let rotated = member_from_schwarz(&PowerSeries::new(rotated_w), ORDER).unwrap();
        let lhs = rotated.coefficient_set().unwrap();
        let rhs = m.coefficient_set().unwrap().rotated(theta);
        prop_assert!(close(lhs.a2, rhs.a2) && close(lhs.a3, rhs.a3) && close(lhs.a4, rhs.a4));
        prop_assert!(close(lhs.a5.unwrap(), rhs.a5.unwrap()));
    }

    #[test]
    fn values_stay_in_the_image_domain(params in schur_params(), r in 0.0f64..=0.95, t in -3.2f64..3.2) {
        let w = SchwarzFunction::Schur(params);
        let z = Complex64::from_polar(r, t);
        let wz = w.eval(z);
        prop_assert!(wz.norm() <= r + 1e-12);
        let value = kernel_eval(wz).unwrap();
        prop_assert_eq!(membership(value).unwrap(), Region::Inside);
    }

    #[test]
    fn log_derivative_series_matches_pointwise_kernel(params in schur_params(), r in 0.0f64..0.2, t in -3.2f64..3.2) {
        let m = member(&params, 16);
        let z = Complex64::from_polar(r, t);
        let series_value = m.log_derivative().unwrap().eval(z);
        let direct = kernel_eval(SchwarzFunction::Schur(params).eval(z)).unwrap();
        prop_assert!((series_value - direct).norm() < 1e-8);
    }
}

#[test]
fn identity_is_the_zero_schwarz_member() {
    let m = member_from_schwarz(&PowerSeries::zero(ORDER), ORDER).unwrap();
    let set = m.coefficient_set().unwrap();
    let id = CoefficientSet::identity();
    assert_eq!(set.a2, id.a2);
    assert_eq!(set.a5, id.a5);
    for k in 2..=ORDER {
        assert!(m.f[k].norm() < 1e-15);
    }
}

#[test]
fn oversized_schwarz_prefix_is_rejected() {
    let w = PowerSeries::from_real(&[0.0, 0.9, 0.5, 0.0, 0.0]);
    assert!(member_from_schwarz(&w, 4).is_err());
    assert!(coeffs_from_b(&SchwarzPrefix::new(
        Complex64::new(0.9, 0.0),
        Complex64::new(0.5, 0.0),
        Complex64::new(0.0, 0.0),
    ))
    .is_err());
}

#[test]
fn parameters_outside_the_disk_are_rejected() {
    assert!(SchwarzParams::real(1.1, 0.0, 0.0).is_err());
    assert!(member_from_function(&SchwarzFunction::Schur(vec![Complex64::new(0.0, 1.5)]), ORDER).is_err());
}

#[test]
fn kernel_rejects_the_logarithm_cut() {
    assert!(kernel_eval(Complex64::new(-1.0, 0.0)).is_err());
    assert!(kernel_eval(Complex64::new(-1.5, 0.3)).is_err());
}
