//! Geometry of the balloon domain `B(𝔻) = {w : |exp(1 − 1/w) − 1| < 1}`.

use alloc::vec::Vec;
use core::f64::consts::{LN_2, PI};

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};

/// Half-width of the tolerance band around the boundary.
pub const MEMBERSHIP_TOL: f64 = 1e-10;
/// Neighbourhood of `θ = ±π` excluded from boundary sampling.
pub const DEFAULT_CUSP_MARGIN: f64 = 1e-2;
pub const DEFAULT_STARLIKE_SAMPLES: usize = 4096;
/// Rightmost point as usually quoted, `1/(1 − log 2) ≈ 3.2589`.
pub const QUOTED_TIP: f64 = 3.2589;
/// Upper leftmost point as usually quoted.
pub const QUOTED_LEFTMOST: (f64, f64) = (-0.181, 0.678);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Region {
    Inside,
    Boundary,
    Outside,
}

/// `|exp(1 − 1/w) − 1|`, which is `< 1` exactly on the domain.
pub fn defining_modulus(w: Complex64) -> Result<f64> {
    if w.re == 0.0 && w.im == 0.0 {
        return Err(Error::OriginExcluded);
    }
    Ok(((Complex64::new(1.0, 0.0) - w.inv()).exp() - 1.0).norm())
}

pub fn membership(w: Complex64) -> Result<Region> {
    let m = defining_modulus(w)?;
    Ok(if (m - 1.0).abs() <= MEMBERSHIP_TOL {
        Region::Boundary
    } else if m < 1.0 {
        Region::Inside
    } else {
        Region::Outside
    })
}

/// `(θ, w(θ))` on `∂B(𝔻)`.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoundaryPoint {
    pub theta: f64,
    pub w: Complex64,
}

impl BoundaryPoint {
    /// Deviation of `|exp(1 − 1/w) − 1|` from 1.
    pub fn residual(&self) -> f64 {
        defining_modulus(self.w).map_or(f64::INFINITY, |m| (m - 1.0).abs())
    }
}

/// `w(θ) = [1 − log(2cos(θ/2)) − iθ/2]⁻¹` for `θ ∈ (−π, π)`.
pub fn boundary_point(theta: f64) -> Result<BoundaryPoint> {
    if !(theta.abs() < PI) {
        return Err(Error::DomainError { what: "theta must lie in (-pi, pi)", value: theta });
    }
    let a = 1.0 - (2.0 * (theta.abs() * 0.5).cos()).ln();
    let b = theta * 0.5;
    let d = a * a + b * b;
    Ok(BoundaryPoint { theta, w: Complex64::new(a / d, b / d) })
}

/// `1/(1 − log 2)`, the image of `θ = 0`.
pub fn tip() -> f64 {
    1.0 / (1.0 - LN_2)
}

/// `samples` points with `θ` equally spaced over `[−π + margin, π − margin]`.
/// The grid is mirrored so that `w(−θ) = conj w(θ)` holds bit for bit.
pub fn boundary_curve(samples: usize, cusp_margin: f64) -> Result<Vec<BoundaryPoint>> {
    if samples < 2 {
        return Err(Error::InvalidConfig("boundary sampling needs at least 2 samples"));
    }
    if !(cusp_margin > 0.0 && cusp_margin < PI) {
        return Err(Error::DomainError { what: "cusp margin must lie in (0, pi)", value: cusp_margin });
    }
    let half = PI - cusp_margin;
    let step = 2.0 * half / (samples - 1) as f64;
    let mut thetas = alloc::vec![0.0; samples];
    for k in 0..samples / 2 {
        let t = -half + step * k as f64;
        thetas[k] = t;
        thetas[samples - 1 - k] = -t;
    }
    thetas.into_iter().map(boundary_point).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum StarlikenessVerdict {
    Starlike,
    NotStarlike,
    Indeterminate,
}

#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct StarlikenessReport {
    pub samples: usize,
    pub verdict: StarlikenessVerdict,
    /// Smallest increment of `arg(w(θ) − 1)` between consecutive samples.
    pub min_increment: f64,
    /// Total winding of `arg(w(θ) − 1)` over the sampled arc.
    pub total_winding: f64,
}

/// Discrete check that `arg(w(θ) − 1)` increases along the boundary.
pub fn starlikeness_probe(samples: usize) -> StarlikenessReport {
    if samples < 16 {
        return StarlikenessReport {
            samples,
            verdict: StarlikenessVerdict::Indeterminate,
            min_increment: f64::NAN,
            total_winding: f64::NAN,
        };
    }
    let curve = boundary_curve(samples, DEFAULT_CUSP_MARGIN).expect("valid sampling");
    let args: Vec<f64> = curve.iter().map(|p| (p.w - 1.0).arg()).collect();
    let min_increment = args.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min);
    StarlikenessReport {
        samples,
        verdict: if min_increment > 0.0 { StarlikenessVerdict::Starlike } else { StarlikenessVerdict::NotStarlike },
        min_increment,
        total_winding: args[args.len() - 1] - args[0],
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LeftmostReport {
    /// Sample with the smallest real part in the upper half-plane.
    pub located: BoundaryPoint,
    pub quoted: (f64, f64),
    /// Distance from the located point to the quoted one.
    pub deviation: f64,
    /// Sample closest to the quoted point, and its distance.
    pub nearest: BoundaryPoint,
    pub nearest_distance: f64,
    /// `min Re w` over the whole sampled curve.
    pub min_re: f64,
}

pub fn leftmost_point(samples: usize, cusp_margin: f64) -> Result<LeftmostReport> {
    let curve = boundary_curve(samples, cusp_margin)?;
    let quoted = QUOTED_LEFTMOST;
    let q = Complex64::new(quoted.0, quoted.1);
    let upper = curve.iter().filter(|p| p.theta >= 0.0);
    let mut located = curve[curve.len() - 1];
    let mut nearest = located;
    for p in upper {
        if p.w.re < located.w.re {
            located = *p;
        }
        if (p.w - q).norm() < (nearest.w - q).norm() {
            nearest = *p;
        }
    }
    let min_re = curve.iter().map(|p| p.w.re).fold(f64::INFINITY, f64::min);
    Ok(LeftmostReport {
        located,
        quoted,
        deviation: (located.w - q).norm(),
        nearest,
        nearest_distance: (nearest.w - q).norm(),
        min_re,
    })
}

/// Behaviour of the boundary as `θ → π`.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CuspReport {
    pub theta: f64,
    pub w: Complex64,
    pub modulus: f64,
    pub arg: f64,
    /// `|(x − 1/2)² + y² − 1/4|` at the sample.
    pub quoted_circle_deviation: f64,
    /// `| |w − i/π| − 1/π |` at the sample.
    pub limit_circle_deviation: f64,
}

/// Near-cusp sample at `θ = π − margin`.
pub fn cusp_report(margin: f64) -> Result<CuspReport> {
    let p = boundary_point(PI - margin)?;
    let w = p.w;
    let r = 1.0 / PI;
    Ok(CuspReport {
        theta: p.theta,
        w,
        modulus: w.norm(),
        arg: w.arg(),
        quoted_circle_deviation: ((w.re - 0.5).powi(2) + w.im * w.im - 0.25).abs(),
        limit_circle_deviation: ((w - Complex64::new(0.0, r)).norm() - r).abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_examples() {
        assert_eq!(membership(Complex64::new(1.0, 0.0)).unwrap(), Region::Inside);
        assert_eq!(defining_modulus(Complex64::new(1.0, 0.0)).unwrap(), 0.0);
        assert_eq!(membership(Complex64::new(tip(), 0.0)).unwrap(), Region::Boundary);
        assert_eq!(membership(Complex64::new(-1.0, 0.0)).unwrap(), Region::Outside);
        let m = defining_modulus(Complex64::new(-1.0, 0.0)).unwrap();
        assert!((m - (2.0f64.exp() - 1.0)).abs() < 1e-12);
        assert_eq!(membership(Complex64::new(0.0, 0.0)), Err(Error::OriginExcluded));
    }

    #[test]
    fn tip_value() {
        let p = boundary_point(0.0).unwrap();
        assert_eq!(p.w, Complex64::new(tip(), 0.0));
        assert!((tip() - QUOTED_TIP).abs() < 1e-4);
    }

    #[test]
    fn curve_on_boundary_and_symmetric() {
        let curve = boundary_curve(1001, DEFAULT_CUSP_MARGIN).unwrap();
        assert_eq!(curve.len(), 1001);
        for p in &curve {
            assert!(p.residual() <= 1e-10, "θ = {}: {}", p.theta, p.residual());
            assert!(p.w.re > 0.0);
        }
        for k in 0..curve.len() {
            let (a, b) = (curve[k], curve[curve.len() - 1 - k]);
            assert_eq!(a.theta, -b.theta);
            assert_eq!(a.w, b.w.conj());
        }
        assert!((curve[0].theta + PI - DEFAULT_CUSP_MARGIN).abs() < 1e-15);
        assert!(boundary_curve(1, DEFAULT_CUSP_MARGIN).is_err());
        assert!(boundary_point(PI).is_err());
    }

    #[test]
    fn cusp_is_tangent_to_real_axis() {
        let mut previous = f64::INFINITY;
        for margin in [1e-2, 1e-4, 1e-6, 1e-8] {
            let c = cusp_report(margin).unwrap();
            assert!(c.modulus < previous);
            previous = c.modulus;
            assert!(c.arg > 0.0 && c.arg < 0.3);
            assert!(c.limit_circle_deviation < 1e-2);
        }
        assert!(cusp_report(1e-8).unwrap().modulus < 0.06);
        assert!(cusp_report(1e-2).unwrap().quoted_circle_deviation > 1e-2);
    }

    #[test]
    fn boundary_lies_on_circles_through_origin() {
        // |w − i/θ| = 1/θ holds identically along the curve
        for theta in [0.3, 1.0, 2.0, 3.0] {
            let w = boundary_point(theta).unwrap().w;
            let r = 1.0 / theta;
            assert!(((w - Complex64::new(0.0, r)).norm() - r).abs() < 1e-12);
        }
    }

    #[test]
    fn starlike_probe() {
        let r = starlikeness_probe(DEFAULT_STARLIKE_SAMPLES);
        assert_eq!(r.verdict, StarlikenessVerdict::Starlike);
        assert!(r.min_increment > 0.0);
        assert!(r.total_winding > 6.0 && r.total_winding < 2.0 * PI);
        assert_eq!(starlikeness_probe(2).verdict, StarlikenessVerdict::Indeterminate);
    }

    #[test]
    fn leftmost_report_locates_positive_real_part() {
        let r = leftmost_point(4096, DEFAULT_CUSP_MARGIN).unwrap();
        assert!(r.min_re > 0.0);
        assert!(r.located.w.re > 0.0);
        assert!(r.deviation > 0.18);
        assert!(r.nearest_distance > 0.18);
    }
}
