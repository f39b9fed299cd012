//! The kernel `B(z) = 1/(1 − log(1+z))`, class members built from Schwarz
//! functions, and the coefficient maps used by the functionals.

mod geometry;

pub use geometry::{
    boundary_curve, boundary_point, cusp_report, leftmost_point, membership, starlikeness_probe, tip, BoundaryPoint,
    CuspReport, LeftmostReport, Region, StarlikenessReport, StarlikenessVerdict, DEFAULT_CUSP_MARGIN,
    DEFAULT_STARLIKE_SAMPLES, MEMBERSHIP_TOL, QUOTED_LEFTMOST, QUOTED_TIP,
};

use num_complex::Complex64;
use num_traits::Zero;

use crate::caratheodory::{CaratheodoryPrefix, SchwarzFunction, SchwarzPrefix, INEQUALITY_TOL};
use crate::error::{Error, Result};
use crate::series::PowerSeries;

/// Residual allowed between `z f'/f` and `B(w)` on stored coefficients.
pub const MEMBER_RESIDUAL_TOL: f64 = 1e-10;

/// Taylor expansion of `B` at the origin.
#[derive(Clone, Debug, PartialEq)]
pub struct BalloonKernel {
    pub series: PowerSeries,
}

pub fn kernel_series(order: usize) -> Result<BalloonKernel> {
    if order < 1 {
        return Err(Error::OrderTooSmall { order, needed: 1 });
    }
    let one = PowerSeries::one(order);
    let denominator = one.sub(&PowerSeries::log1p_z(order));
    Ok(BalloonKernel { series: one.div(&denominator)? })
}

/// `B(w)` at a point. Requires `Re(1 + w) > 0` so the principal logarithm is
/// taken away from its cut.
pub fn kernel_eval(w: Complex64) -> Result<Complex64> {
    let arg = Complex64::new(1.0, 0.0) + w;
    if arg.re <= 0.0 {
        return Err(Error::BranchViolation { re: arg.re });
    }
    Ok((Complex64::new(1.0, 0.0) - arg.ln()).inv())
}

/// A normalized member `f` of the class together with the Schwarz series that generated it.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassMember {
    pub f: PowerSeries,
    pub schwarz: PowerSeries,
    /// Max coefficient deviation of `z f'/f` from `B(w)`.
    pub residual: f64,
}

impl ClassMember {
    /// `a_k`, or `None` beyond the truncation order.
    pub fn a(&self, k: usize) -> Option<Complex64> {
        self.f.coeff(k)
    }

    /// `z f'(z) / f(z)` as a series (one order below `f`).
    pub fn log_derivative(&self) -> Result<PowerSeries> {
        self.f.derivative().div(&self.f.div_z())
    }

    pub fn coefficient_set(&self) -> Result<CoefficientSet> {
        CoefficientSet::from_member(self)
    }
}

/// `f = z exp(∫₀^z (B(w(t)) − 1)/t dt)`, i.e. the solution of `z f'/f = B(w)`.
///
/// `w` must have `w₀ = 0`, satisfy the Schwarz prefix inequalities, and be
/// known to at least `order − 1`.
pub fn member_from_schwarz(w: &PowerSeries, order: usize) -> Result<ClassMember> {
    if order < 2 {
        return Err(Error::OrderTooSmall { order, needed: 2 });
    }
    if w[0] != Complex64::zero() {
        return Err(Error::NonvanishingInner { modulus: w[0].norm() });
    }
    if w.order() >= 3 {
        SchwarzPrefix::from_series(w)?.check(INEQUALITY_TOL)?;
    } else if w.order() >= 1 && w[1].norm() > 1.0 + INEQUALITY_TOL {
        return Err(Error::SchwarzViolation { which: 1, excess: w[1].norm() - 1.0 });
    }
    let m = order - 1;
    if w.order() < m {
        return Err(Error::OrderTooSmall { order: w.order(), needed: m });
    }
    let w = w.truncate(m);
    let b_of_w = kernel_series(m)?.series.compose(&w)?;
    let integrand = b_of_w.sub(&PowerSeries::one(m)).div_z();
    let f = integrand.integrate().exp().mul_z();

    let member = ClassMember { f, schwarz: w, residual: 0.0 };
    let residual = member.log_derivative()?.max_abs_diff(&b_of_w);
    Ok(ClassMember { residual, ..member })
}

pub fn member_from_function(w: &SchwarzFunction, order: usize) -> Result<ClassMember> {
    member_from_schwarz(&w.series(order)?, order)
}

/// The three extremal functions, generated by `w = z`, `w = z²` and `w = iz`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Extremal {
    F1,
    F2,
    F3,
}

impl Extremal {
    pub const ALL: [Extremal; 3] = [Extremal::F1, Extremal::F2, Extremal::F3];

    pub fn label(self) -> &'static str {
        match self {
            Extremal::F1 => "f1",
            Extremal::F2 => "f2",
            Extremal::F3 => "f3",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "f1" | "F1" => Some(Extremal::F1),
            "f2" | "F2" => Some(Extremal::F2),
            "f3" | "F3" => Some(Extremal::F3),
            _ => None,
        }
    }

    pub fn schwarz(self) -> SchwarzFunction {
        let one = Complex64::new(1.0, 0.0);
        match self {
            Extremal::F1 => SchwarzFunction::Monomial { c: one, k: 1 },
            Extremal::F2 => SchwarzFunction::Monomial { c: one, k: 2 },
            Extremal::F3 => SchwarzFunction::Monomial { c: Complex64::new(0.0, 1.0), k: 1 },
        }
    }

    pub fn member(self, order: usize) -> Result<ClassMember> {
        member_from_function(&self.schwarz(), order)
    }

    /// Coefficient set computed through the series route at order 8.
    pub fn coefficient_set(self) -> CoefficientSet {
        self.member(8).and_then(|m| m.coefficient_set()).expect("extremal members are valid")
    }
}

impl core::fmt::Display for Extremal {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.label())
    }
}

/// `a₂, a₃, a₄` (and `a₅` when available) of a class member.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct InitialCoefficients {
    pub a2: Complex64,
    pub a3: Complex64,
    pub a4: Complex64,
    pub a5: Option<Complex64>,
}

/// `a₂…a₄` from `p₁…p₃` (and `a₅` when `p₄` is known).
#[inline]
pub fn a_from_p(p1: Complex64, p2: Complex64, p3: Complex64) -> [Complex64; 3] {
    let p1sq = p1 * p1;
    [p1 * 0.5, (p1sq + p2 * 4.0) / 16.0, (p1sq * p1 + p1 * p2 * 12.0 + p3 * 48.0) / 288.0]
}

pub fn coeffs_from_p(p: &CaratheodoryPrefix) -> InitialCoefficients {
    let [a2, a3, a4] = a_from_p(p.p1, p.p2, p.p3);
    let a5 = p.p4.map(|p4| {
        let p1sq = p.p1 * p.p1;
        -(p1sq * p1sq * 7.0 - p1sq * p.p2 * 24.0 - p.p1 * p.p3 * 96.0 - p4 * 576.0) / 4608.0
    });
    InitialCoefficients { a2, a3, a4, a5 }
}

/// `a₂…a₄` from a Schwarz prefix, without checking the prefix inequalities.
#[inline]
pub fn a_from_b(b1: Complex64, b2: Complex64, b3: Complex64) -> [Complex64; 3] {
    let b1sq = b1 * b1;
    [b1, b1sq * 0.75 + b2 * 0.5, b1sq * b1 * (19.0 / 36.0) + b1 * b2 * (5.0 / 6.0) + b3 / 3.0]
}

/// `a₅` from `b₁…b₄`.
#[inline]
pub fn a5_from_b(b: [Complex64; 4]) -> Complex64 {
    let [b1, b2, b3, b4] = b;
    let b1sq = b1 * b1;
    b1sq * b1sq * (101.0 / 288.0) + b1sq * b2 * (23.0 / 24.0) + b1 * b3 * (7.0 / 12.0) + b2 * b2 * 0.25 + b4 * 0.25
}

pub fn coeffs_from_b(b: &SchwarzPrefix) -> Result<[Complex64; 3]> {
    b.check(INEQUALITY_TOL)?;
    Ok(a_from_b(b.b1, b.b2, b.b3))
}

/// Initial, logarithmic (`γ`) and inverse-logarithmic (`Γ`) coefficients of one member.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CoefficientSet {
    pub a2: Complex64,
    pub a3: Complex64,
    pub a4: Complex64,
    pub a5: Option<Complex64>,
    pub gamma1: Complex64,
    pub gamma2: Complex64,
    pub gamma3: Complex64,
    pub big_gamma1: Complex64,
    pub big_gamma2: Complex64,
    pub big_gamma3: Complex64,
}

impl CoefficientSet {
    /// The identity function `f(z) = z`.
    pub fn identity() -> Self {
        full_coefficient_set(Complex64::zero(), Complex64::zero(), Complex64::zero(), Some(Complex64::zero()))
    }

    pub fn from_member(member: &ClassMember) -> Result<Self> {
        let order = member.f.order();
        if order < 4 {
            return Err(Error::OrderTooSmall { order, needed: 4 });
        }
        Ok(full_coefficient_set(member.f[2], member.f[3], member.f[4], member.f.coeff(5)))
    }

    /// `[a₀, a₁, a₂, …]` with `a₀ = 0`, `a₁ = 1`; includes `a₅` when known.
    pub fn a_stream(&self) -> alloc::vec::Vec<Complex64> {
        let mut v = alloc::vec![Complex64::zero(), Complex64::new(1.0, 0.0), self.a2, self.a3, self.a4];
        v.extend(self.a5);
        v
    }

    /// `[0, γ₁, γ₂, γ₃]`, indexed by subscript.
    pub fn gamma_stream(&self) -> [Complex64; 4] {
        [Complex64::zero(), self.gamma1, self.gamma2, self.gamma3]
    }

    /// `[0, Γ₁, Γ₂, Γ₃]`, indexed by subscript.
    pub fn big_gamma_stream(&self) -> [Complex64; 4] {
        [Complex64::zero(), self.big_gamma1, self.big_gamma2, self.big_gamma3]
    }

    /// Rotated member `e^{-iθ} f(e^{iθ} z)`: `a_k ↦ e^{i(k−1)θ} a_k`.
    pub fn rotated(&self, theta: f64) -> Self {
        let r = Complex64::from_polar(1.0, theta);
        full_coefficient_set(self.a2 * r, self.a3 * r * r, self.a4 * r * r * r, self.a5.map(|a5| a5 * r * r * r * r))
    }
}

#[inline]
pub fn full_coefficient_set(a2: Complex64, a3: Complex64, a4: Complex64, a5: Option<Complex64>) -> CoefficientSet {
    let a2sq = a2 * a2;
    let a2cube = a2sq * a2;
    CoefficientSet {
        a2,
        a3,
        a4,
        a5,
        gamma1: a2 * 0.5,
        gamma2: (a3 - a2sq * 0.5) * 0.5,
        gamma3: (a4 - a2 * a3 + a2cube / 3.0) * 0.5,
        big_gamma1: -a2 * 0.5,
        big_gamma2: -(a3 - a2sq * 1.5) * 0.5,
        big_gamma3: -(a4 - a2 * a3 * 4.0 + a2cube * (10.0 / 3.0)) * 0.5,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caratheodory::{lemma1_coefficients, p_from_schwarz, schur_chain_series, schur_prefix4, schwarz_from_p};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn kernel_expansion() {
        // 1/(1 - L) with L the Mercator series, expanded by hand
        let k = kernel_series(4).unwrap();
        let expected = [1.0, 1.0, 0.5, 1.0 / 3.0, 1.0 / 6.0];
        for (i, e) in expected.iter().enumerate() {
            assert!(close(k.series[i], c(*e, 0.0), 1e-15), "B_{i}");
        }
        assert_eq!(k.series[0], c(1.0, 0.0));
        assert!(k.series[1].re > 0.0);
        assert!(kernel_series(0).is_err());
    }

    #[test]
    fn kernel_point_evaluation_agrees_with_series() {
        let k = kernel_series(60).unwrap();
        for w in [c(0.1, 0.2), c(-0.3, 0.05), c(0.0, -0.4)] {
            assert!(close(kernel_eval(w).unwrap(), k.series.eval(w), 1e-12));
        }
        assert!(kernel_eval(c(-1.5, 0.0)).is_err());
    }

    #[test]
    fn extremal_f1() {
        let m = Extremal::F1.member(5).unwrap();
        let expected = [0.0, 1.0, 1.0, 0.75, 19.0 / 36.0, 101.0 / 288.0];
        for (k, e) in expected.iter().enumerate() {
            assert!(close(m.f[k], c(*e, 0.0), 1e-12), "a{k} = {}", m.f[k]);
        }
        assert!(m.residual <= MEMBER_RESIDUAL_TOL);
    }

    #[test]
    fn extremal_f2() {
        let m = Extremal::F2.member(7).unwrap();
        let expected = [0.0, 1.0, 0.0, 0.5, 0.0, 0.25, 0.0, 5.0 / 36.0];
        for (k, e) in expected.iter().enumerate() {
            assert!(close(m.f[k], c(*e, 0.0), 1e-12), "a{k} = {}", m.f[k]);
        }
    }

    #[test]
    fn extremal_f3() {
        let m = Extremal::F3.member(5).unwrap();
        let expected =
            [c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0), c(-0.75, 0.0), c(0.0, -19.0 / 36.0), c(101.0 / 288.0, 0.0)];
        for (k, e) in expected.iter().enumerate() {
            assert!(close(m.f[k], *e, 1e-12), "a{k} = {}", m.f[k]);
        }
    }

    #[test]
    fn member_rejects_invalid_schwarz() {
        let w = PowerSeries::from_real(&[0.0, 0.9, 0.5, 0.0, 0.0]);
        assert!(matches!(member_from_schwarz(&w, 5), Err(Error::SchwarzViolation { which: 2, .. })));
        let w = PowerSeries::from_real(&[0.1, 0.5, 0.0, 0.0, 0.0]);
        assert!(member_from_schwarz(&w, 5).is_err());
    }

    #[test]
    fn coeffs_from_p_examples() {
        let a = coeffs_from_p(&CaratheodoryPrefix::real(2.0, 2.0, 2.0, 2.0));
        assert!(close(a.a2, c(1.0, 0.0), 1e-15));
        assert!(close(a.a3, c(0.75, 0.0), 1e-15));
        assert!(close(a.a4, c(19.0 / 36.0, 0.0), 1e-15));
        assert!(close(a.a5.unwrap(), c(101.0 / 288.0, 0.0), 1e-15));

        let a = coeffs_from_p(&CaratheodoryPrefix::real(0.0, 0.0, 0.0, 0.0));
        assert_eq!([a.a2, a.a3, a.a4, a.a5.unwrap()], [c(0.0, 0.0); 4]);

        let a = coeffs_from_p(&CaratheodoryPrefix::real(0.0, 2.0, 0.0, 2.0));
        assert!(close(a.a2, c(0.0, 0.0), 1e-15));
        assert!(close(a.a3, c(0.5, 0.0), 1e-15));
        assert!(close(a.a4, c(0.0, 0.0), 1e-15));
        assert!(close(a.a5.unwrap(), c(0.25, 0.0), 1e-15));
    }

    #[test]
    fn coeffs_from_b_examples() {
        let a = coeffs_from_b(&SchwarzPrefix::new(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0))).unwrap();
        assert!(close(a[0], c(1.0, 0.0), 1e-15) && close(a[1], c(0.75, 0.0), 1e-15));
        assert!(close(a[2], c(19.0 / 36.0, 0.0), 1e-15));

        let a = coeffs_from_b(&SchwarzPrefix::new(c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0))).unwrap();
        assert_eq!(a, [c(0.0, 0.0); 3]);

        let a = coeffs_from_b(&SchwarzPrefix::new(c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0))).unwrap();
        assert!(close(a[0], c(0.0, 1.0), 1e-15) && close(a[1], c(-0.75, 0.0), 1e-15));
        assert!(close(a[2], c(0.0, -19.0 / 36.0), 1e-15));

        let bad = SchwarzPrefix::new(c(0.5, 0.0), c(0.9, 0.0), c(0.0, 0.0));
        assert!(matches!(coeffs_from_b(&bad), Err(Error::SchwarzViolation { .. })));
    }

    #[test]
    fn coefficient_set_examples() {
        let f1 = Extremal::F1.coefficient_set();
        assert!(close(f1.gamma1, c(0.5, 0.0), 1e-12));
        assert!(close(f1.gamma2, c(0.125, 0.0), 1e-12));
        assert!(close(f1.gamma3, c(1.0 / 18.0, 0.0), 1e-12));

        let id = CoefficientSet::identity();
        for v in [id.gamma1, id.gamma2, id.gamma3, id.big_gamma1, id.big_gamma2, id.big_gamma3] {
            assert_eq!(v, c(0.0, 0.0));
        }

        let s = full_coefficient_set(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), None);
        assert!(close(s.big_gamma1, c(-0.5, 0.0), 1e-15));
        assert!(close(s.big_gamma2, c(0.75, 0.0), 1e-15));
        assert!(close(s.big_gamma3, c(-5.0 / 3.0, 0.0), 1e-15));
    }

    #[test]
    fn inverse_log_coefficients_match_series_definition() {
        // F = f^{-1}, Γ_n are the coefficients of log(F(w)/w)/2
        let f = PowerSeries::from_real(&[0.0, 1.0, 1.0, 0.0, 0.0]);
        let inv = f.revert().unwrap();
        let log = inv.div_z().log().unwrap();
        let s = full_coefficient_set(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), None);
        assert!(close(log[1] * 0.5, s.big_gamma1, 1e-14));
        assert!(close(log[2] * 0.5, s.big_gamma2, 1e-14));
        assert!(close(log[3] * 0.5, s.big_gamma3, 1e-14));
    }

    #[test]
    fn three_routes_agree_on_schur_members() {
        let params = [c(0.35, 0.2), c(-0.4, 0.6), c(0.7, -0.1), c(0.2, 0.3)];
        let w = schur_chain_series(&params, 8);
        let member = member_from_schwarz(&w, 8).unwrap();
        assert!(member.residual < 1e-12);

        let b = schur_prefix4(params);
        let via_b = a_from_b(b[0], b[1], b[2]);
        let a5_b = a5_from_b(b);

        let p = p_from_schwarz(&w).unwrap();
        let via_p = coeffs_from_p(&CaratheodoryPrefix::from_series(&p).unwrap());
        let lemma = lemma1_coefficients(params[0], params[1], params[2]);
        for k in 0..3 {
            assert!(close(p[k + 1], lemma[k], 1e-14), "p{}", k + 1);
        }

        for (k, (x, y)) in via_b.iter().zip([via_p.a2, via_p.a3, via_p.a4]).enumerate() {
            assert!(close(*x, member.f[k + 2], 1e-12), "b-route a{}", k + 2);
            assert!(close(y, member.f[k + 2], 1e-12), "p-route a{}", k + 2);
        }
        assert!(close(a5_b, member.f[5], 1e-12));
        assert!(close(via_p.a5.unwrap(), member.f[5], 1e-12));

        let w_back = schwarz_from_p(&p).unwrap();
        assert!(w_back.max_abs_diff(&w) < 1e-13);
    }
}
