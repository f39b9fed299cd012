//! Carathéodory functions and Schwarz functions built from disk parameters.
//!
//! A Schwarz function `w(z) = z φ(z)` is generated by the Schur algorithm:
//! `φ = (ζ₁ + z φ₁) / (1 + conj(ζ₁) z φ₁)` with `φ₁` built the same way from
//! `ζ₂, ζ₃, …` and the last parameter taken as a constant. The parameters
//! are exactly the ones in the three-term representation of `p = (1+w)/(1-w)`.

use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::{Float, Zero};

use crate::error::{Error, Result};
use crate::series::PowerSeries;
use crate::DISK_TOL;

/// Slack used by the coefficient-inequality predicates.
pub const INEQUALITY_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SchwarzParams {
    pub zeta1: Complex64,
    pub zeta2: Complex64,
    pub zeta3: Complex64,
}

impl SchwarzParams {
    pub fn new(zeta1: Complex64, zeta2: Complex64, zeta3: Complex64) -> Result<Self> {
        let s = Self { zeta1, zeta2, zeta3 };
        s.validate()?;
        Ok(s)
    }

    pub fn real(zeta1: f64, zeta2: f64, zeta3: f64) -> Result<Self> {
        Self::new(Complex64::new(zeta1, 0.0), Complex64::new(zeta2, 0.0), Complex64::new(zeta3, 0.0))
    }

    pub fn validate(&self) -> Result<()> {
        for (index, z) in [self.zeta1, self.zeta2, self.zeta3].into_iter().enumerate() {
            let modulus = z.norm();
            if !(modulus <= 1.0 + DISK_TOL) {
                return Err(Error::ParamOutOfDisk { index: index + 1, modulus });
            }
        }
        Ok(())
    }

    pub fn as_array(&self) -> [Complex64; 3] {
        [self.zeta1, self.zeta2, self.zeta3]
    }
}

/// First Taylor coefficients of a Carathéodory function. `p4` is only known
/// when the prefix came from an explicit Schwarz series.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CaratheodoryPrefix {
    pub p1: Complex64,
    pub p2: Complex64,
    pub p3: Complex64,
    pub p4: Option<Complex64>,
}

impl CaratheodoryPrefix {
    pub fn new(p1: Complex64, p2: Complex64, p3: Complex64, p4: Option<Complex64>) -> Self {
        Self { p1, p2, p3, p4 }
    }

    pub fn real(p1: f64, p2: f64, p3: f64, p4: f64) -> Self {
        let c = |x| Complex64::new(x, 0.0);
        Self::new(c(p1), c(p2), c(p3), Some(c(p4)))
    }

    /// Reads `p₁…p₄` off a series with `p₀ = 1`.
    pub fn from_series(p: &PowerSeries) -> Result<Self> {
        if p.order() < 3 {
            return Err(Error::OrderTooSmall { order: p.order(), needed: 3 });
        }
        Ok(Self { p1: p[1], p2: p[2], p3: p[3], p4: p.coeff(4) })
    }

    fn get(&self, t: usize) -> Option<Complex64> {
        match t {
            1 => Some(self.p1),
            2 => Some(self.p2),
            3 => Some(self.p3),
            4 => self.p4,
            _ => None,
        }
    }
}

/// Taylor coefficients `b₁, b₂, b₃` of a Schwarz function.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SchwarzPrefix {
    pub b1: Complex64,
    pub b2: Complex64,
    pub b3: Complex64,
}

impl SchwarzPrefix {
    pub fn new(b1: Complex64, b2: Complex64, b3: Complex64) -> Self {
        Self { b1, b2, b3 }
    }

    pub fn from_series(w: &PowerSeries) -> Result<Self> {
        if w.order() < 3 {
            return Err(Error::OrderTooSmall { order: w.order(), needed: 3 });
        }
        Ok(Self { b1: w[1], b2: w[2], b3: w[3] })
    }

    /// Excess of each of the three coefficient inequalities
    /// `|b₁| ≤ 1`, `|b₂| ≤ 1 − |b₁|²`, `|b₃| ≤ 1 − |b₁|² − |b₂|²/(1+|b₁|)`;
    /// non-positive entries mean the inequality holds.
    pub fn excesses(&self) -> [f64; 3] {
        let x = self.b1.norm();
        let y = self.b2.norm();
        [x - 1.0, y - (1.0 - x * x), self.b3.norm() - (1.0 - x * x - y * y / (1.0 + x))]
    }

    pub fn check(&self, tol: f64) -> Result<()> {
        for (i, excess) in self.excesses().into_iter().enumerate() {
            if !(excess <= tol) {
                return Err(Error::SchwarzViolation { which: i + 1, excess });
            }
        }
        Ok(())
    }
}

/// `(p₁, p₂, p₃)` from the three disk parameters, without validation.
#[inline]
pub fn lemma1_coefficients(z1: Complex64, z2: Complex64, z3: Complex64) -> [Complex64; 3] {
    let d1 = 1.0 - z1.norm_sqr();
    let d2 = 1.0 - z2.norm_sqr();
    let z1sq = z1 * z1;
    let p1 = z1 * 2.0;
    let p2 = z1sq * 2.0 + z2 * (2.0 * d1);
    let p3 = z1sq * z1 * 2.0 + z1 * z2 * (4.0 * d1) - z1.conj() * z2 * z2 * (2.0 * d1) + z3 * (2.0 * d1 * d2);
    [p1, p2, p3]
}

pub fn p_from_params(s: &SchwarzParams) -> Result<CaratheodoryPrefix> {
    s.validate()?;
    let [p1, p2, p3] = lemma1_coefficients(s.zeta1, s.zeta2, s.zeta3);
    Ok(CaratheodoryPrefix { p1, p2, p3, p4: None })
}

/// `(1 + ζ₁z)/(1 − ζ₁z)` for unimodular `ζ₁`.
pub fn p_series_extremal_first(zeta1: Complex64, order: usize) -> Result<PowerSeries> {
    if (zeta1.norm() - 1.0).abs() > DISK_TOL {
        return Err(Error::DomainError { what: "|zeta1| (must be 1)", value: zeta1.norm() });
    }
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(Complex64::new(1.0, 0.0));
    let mut power = Complex64::new(1.0, 0.0);
    for _ in 1..=order {
        power *= zeta1;
        coeffs.push(power * 2.0);
    }
    Ok(PowerSeries::new(coeffs))
}

/// The unique Carathéodory function with `|ζ₁| < 1` and unimodular `ζ₂`:
/// `(1 + (conj(ζ₁)ζ₂ + ζ₁)z + ζ₂z²) / (1 + (conj(ζ₁)ζ₂ − ζ₁)z − ζ₂z²)`.
pub fn p_series_extremal_second(zeta1: Complex64, zeta2: Complex64, order: usize) -> Result<PowerSeries> {
    if !(zeta1.norm() < 1.0) {
        return Err(Error::DomainError { what: "|zeta1| (must be < 1)", value: zeta1.norm() });
    }
    if (zeta2.norm() - 1.0).abs() > DISK_TOL {
        return Err(Error::DomainError { what: "|zeta2| (must be 1)", value: zeta2.norm() });
    }
    let mix = zeta1.conj() * zeta2;
    let one = Complex64::new(1.0, 0.0);
    let num = PowerSeries::new(alloc::vec![one, mix + zeta1, zeta2]);
    let den = PowerSeries::new(alloc::vec![one, mix - zeta1, -zeta2]);
    let pad = |s: PowerSeries| {
        let mut c = s.into_coeffs();
        c.resize(order.max(2) + 1, Complex64::zero());
        PowerSeries::new(c).truncate(order)
    };
    pad(num).div(&pad(den))
}

/// `w = (p − 1)/(p + 1)`; requires `p₀ = 1`.
pub fn schwarz_from_p(p: &PowerSeries) -> Result<PowerSeries> {
    if (p[0] - Complex64::new(1.0, 0.0)).norm() > DISK_TOL {
        return Err(Error::NotNormalized);
    }
    let one = PowerSeries::one(p.order());
    let mut w = p.sub(&one).div(&p.add(&one))?.into_coeffs();
    w[0] = Complex64::zero();
    Ok(PowerSeries::new(w))
}

/// `p = (1 + w)/(1 − w)`; requires `w₀ = 0`.
pub fn p_from_schwarz(w: &PowerSeries) -> Result<PowerSeries> {
    if w[0] != Complex64::zero() {
        return Err(Error::NonvanishingInner { modulus: w[0].norm() });
    }
    let one = PowerSeries::one(w.order());
    one.add(w).div(&one.sub(w))
}

/// Schwarz function given by a finite Schur chain, a monomial, or an
/// arbitrary user-supplied prefix.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum SchwarzFunction {
    /// `w = z φ` with `φ` the Schur chain of the listed parameters.
    Schur(Vec<Complex64>),
    /// `w = c z^k` with `|c| ≤ 1`, `k ≥ 1`.
    Monomial { c: Complex64, k: usize },
    /// Truncated series supplied directly; only its stored prefix is known.
    Series(PowerSeries),
}

impl SchwarzFunction {
    pub fn validate(&self) -> Result<()> {
        match self {
            SchwarzFunction::Schur(params) => {
                for (i, z) in params.iter().enumerate() {
                    if !(z.norm() <= 1.0 + DISK_TOL) {
                        return Err(Error::ParamOutOfDisk { index: i + 1, modulus: z.norm() });
                    }
                }
                Ok(())
            }
            SchwarzFunction::Monomial { c, k } => {
                if *k == 0 {
                    return Err(Error::NonvanishingInner { modulus: c.norm() });
                }
                if !(c.norm() <= 1.0 + DISK_TOL) {
                    return Err(Error::ParamOutOfDisk { index: 1, modulus: c.norm() });
                }
                Ok(())
            }
            SchwarzFunction::Series(w) => {
                if w[0] != Complex64::zero() {
                    return Err(Error::NonvanishingInner { modulus: w[0].norm() });
                }
                if w.order() >= 3 {
                    SchwarzPrefix::from_series(w)?.check(INEQUALITY_TOL)?;
                }
                Ok(())
            }
        }
    }

    pub fn series(&self, order: usize) -> Result<PowerSeries> {
        self.validate()?;
        match self {
            SchwarzFunction::Schur(params) => Ok(schur_chain_series(params, order)),
            SchwarzFunction::Monomial { c, k } => Ok(PowerSeries::monomial(*c, *k, order)),
            SchwarzFunction::Series(w) => {
                if w.order() < order {
                    return Err(Error::OrderTooSmall { order: w.order(), needed: order });
                }
                Ok(w.truncate(order))
            }
        }
    }

    /// Value at `z`; exact for the closed forms, a polynomial evaluation of
    /// the prefix for [`SchwarzFunction::Series`].
    pub fn eval(&self, z: Complex64) -> Complex64 {
        match self {
            SchwarzFunction::Schur(params) => z * schur_chain_eval(params, z),
            SchwarzFunction::Monomial { c, k } => *c * z.powu(*k as u32),
            SchwarzFunction::Series(w) => w.eval(z),
        }
    }
}

/// Series of `z φ(z)` for the Schur chain with the given parameters
/// (empty parameters give `w = 0`).
pub fn schur_chain_series(params: &[Complex64], order: usize) -> PowerSeries {
    let Some((&last, rest)) = params.split_last() else {
        return PowerSeries::zero(order);
    };
    let inner_order = order.saturating_sub(1);
    let mut phi = PowerSeries::constant(last, inner_order);
    for &g in rest.iter().rev() {
        let s = phi.mul_z().truncate(inner_order);
        let num = s.add(&PowerSeries::constant(g, inner_order));
        let den = s.scale(g.conj()).add(&PowerSeries::one(inner_order));
        // den has constant term 1, so the division cannot fail
        phi = num.div(&den).expect("unit constant term");
    }
    phi.mul_z().truncate(order)
}

fn schur_chain_eval(params: &[Complex64], z: Complex64) -> Complex64 {
    let Some((&last, rest)) = params.split_last() else {
        return Complex64::zero();
    };
    rest.iter().rev().fold(last, |phi, &g| {
        let s = z * phi;
        (g + s) / (Complex64::new(1.0, 0.0) + g.conj() * s)
    })
}

/// `b₁…b₄` of the Schwarz function with Schur parameters `ζ₁…ζ₄`.
///
/// Uses `φ = g + (1 − |g|²)(s − ḡs² + ḡ²s³ − …)` with `s = zφ_next`, truncated
/// to four terms.
#[inline]
pub fn schur_prefix4(z: [Complex64; 4]) -> [Complex64; 4] {
    let mut phi = [z[3], Complex64::zero(), Complex64::zero(), Complex64::zero()];
    for &g in z[..3].iter().rev() {
        // s = z * phi: coefficients of z^1..z^3
        let (s1, s2, s3) = (phi[0], phi[1], phi[2]);
        let gc = g.conj();
        let d = 1.0 - g.norm_sqr();
        let sq2 = s1 * s1;
        let sq3 = s1 * s2 * 2.0;
        let cube3 = sq2 * s1;
        phi = [g, s1 * d, (s2 - gc * sq2) * d, (s3 - gc * sq3 + gc * gc * cube3) * d];
    }
    phi
}

/// `b₁, b₂, b₃` from three Schur parameters.
#[inline]
pub fn schur_prefix3(z1: Complex64, z2: Complex64, z3: Complex64) -> [Complex64; 3] {
    let d1 = 1.0 - z1.norm_sqr();
    let b2 = z2 * d1;
    let b3 = (z3 * (1.0 - z2.norm_sqr()) - z1.conj() * z2 * z2) * d1;
    [z1, b2, b3]
}

/// Outcome of the classical Carathéodory coefficient inequalities on a prefix.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Lemma3Report {
    /// `|p_t| ≤ 2` for every stored coefficient.
    pub coefficient_bound: bool,
    /// `|p_{t+2k} − ρ p_t p_k²| ≤ 2(1 + 2ρ)` for all available `t, k ≥ 1`.
    pub rho_bound: bool,
    /// `|p₂ − p₁²/2| ≤ 2 − |p₁|²/2`.
    pub p2_bound: bool,
    /// `|p_{n+k} − μ p_n p_k| ≤ 2 max{1, |2μ − 1|}` for all available `n, k ≥ 1`.
    pub mu_bound: bool,
}

impl Lemma3Report {
    pub fn all(&self) -> bool {
        self.coefficient_bound && self.rho_bound && self.p2_bound && self.mu_bound
    }
}

/// Evaluates the inequalities with [`INEQUALITY_TOL`] slack. `rho` is expected in `[0, 1]`.
pub fn check_lemma3(p: &CaratheodoryPrefix, rho: f64, mu: f64) -> Lemma3Report {
    let tol = INEQUALITY_TOL;
    let available: Vec<usize> = (1..=4).filter(|&t| p.get(t).is_some()).collect();
    let at = |t: usize| p.get(t).expect("available index");

    let coefficient_bound = available.iter().all(|&t| at(t).norm() <= 2.0 + tol);

    let mut rho_bound = true;
    for t in 1..=4 {
        for k in 1..=4 {
            if let (Some(pt), Some(pk), Some(high)) = (p.get(t), p.get(k), p.get(t + 2 * k)) {
                rho_bound &= (high - pt * pk * pk * rho).norm() <= 2.0 * (1.0 + 2.0 * rho) + tol;
            }
        }
    }

    let p2_bound = (p.p2 - p.p1 * p.p1 * 0.5).norm() <= 2.0 - p.p1.norm_sqr() / 2.0 + tol;

    let mu_rhs = 2.0 * Float::max(1.0, (2.0 * mu - 1.0).abs());
    let mut mu_bound = true;
    for n in 1..=4 {
        for k in 1..=4 {
            if let (Some(pn), Some(pk), Some(sum)) = (p.get(n), p.get(k), p.get(n + k)) {
                mu_bound &= (sum - pn * pk * mu).norm() <= mu_rhs + tol;
            }
        }
    }

    Lemma3Report { coefficient_bound, rho_bound, p2_bound, mu_bound }
}
