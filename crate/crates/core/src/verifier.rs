//! Numerical certification of the sharp bounds: grid sweeps over the
//! Schur parameters of the Schwarz function, direct evaluation at the
//! extremal functions, and audits of the scalar reductions used to prove them.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::balloon::{
    a5_from_b, a_from_b, a_from_p, full_coefficient_set, member_from_schwarz, CoefficientSet, Extremal,
};
use crate::caratheodory::{lemma1_coefficients, schur_chain_series, schur_prefix3, schur_prefix4};
use crate::choi_y::{audit_proof_scalars, ProofCase, ScalarAudit};
use crate::error::{Error, Result};
use crate::functionals::FunctionalId;

/// Distance from the bound within which the extremal value counts as attaining it.
pub const ATTAINMENT_TOL: f64 = 1e-10;

/// A bound `num/den` together with its decimal value.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ExactBound {
    pub num: u64,
    pub den: u64,
    pub value: f64,
}

impl ExactBound {
    pub const fn new(num: u64, den: u64) -> Self {
        ExactBound { num, den, value: num as f64 / den as f64 }
    }

    /// Best rational approximation of `value` with denominator at most `10⁹`;
    /// `value` itself is kept verbatim.
    pub fn approximate(value: f64) -> Self {
        let (mut h0, mut h1, mut k0, mut k1) = (0u64, 1u64, 1u64, 0u64);
        let mut x = value;
        for _ in 0..64 {
            let a = x.floor();
            if a > 1e12 {
                break;
            }
            let a = a as u64;
            let (h2, k2) = (a * h1 + h0, a * k1 + k0);
            if k2 > 1_000_000_000 {
                break;
            }
            (h0, h1, k0, k1) = (h1, h2, k1, k2);
            let frac = x - a as f64;
            if frac.abs() < 1e-15 || ((h1 as f64 / k1 as f64) - value).abs() <= 1e-15 * value.abs().max(1.0) {
                break;
            }
            x = 1.0 / frac;
        }
        ExactBound { num: h1, den: k1.max(1), value }
    }
}

/// Grid resolution and tolerances of a certification run.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SweepConfig {
    /// Points of the real `ζ₁ ∈ [0, 1]` grid.
    pub zeta1_points: usize,
    /// Radii (including 0 and 1) of the polar disk grids.
    pub radial_points: usize,
    /// Angles of the polar disk grids.
    pub angular_points: usize,
    pub tol_upper: f64,
    pub tol_sharp: f64,
    /// Truncation order for series-route evaluations.
    pub order: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            zeta1_points: 33,
            radial_points: 24,
            angular_points: 64,
            tol_upper: 1e-8,
            tol_sharp: 1e-3,
            order: 12,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.zeta1_points < 2 || self.radial_points < 2 || self.angular_points < 4 {
            return Err(Error::InvalidConfig("sweep grids need at least 2 radii/points and 4 angles"));
        }
        if self.angular_points % 4 != 0 {
            return Err(Error::InvalidConfig("angular points must be a multiple of 4"));
        }
        if !(self.tol_upper >= 0.0 && self.tol_upper <= 1e-8) {
            return Err(Error::InvalidConfig("tol_upper must lie in [0, 1e-8]"));
        }
        if !(self.tol_sharp >= 0.0 && self.tol_sharp.is_finite()) {
            return Err(Error::InvalidConfig("tol_sharp must be finite and non-negative"));
        }
        if self.order < 6 {
            return Err(Error::InvalidConfig("series order must be at least 6"));
        }
        Ok(())
    }

    /// Half the radial and angular resolution (angles kept a multiple of 4).
    pub fn half_resolution(&self) -> Self {
        SweepConfig {
            radial_points: (self.radial_points / 2).max(2),
            angular_points: ((self.angular_points / 2) / 4 * 4).max(4),
            ..*self
        }
    }
}

/// `ζ ∈ [0, 1]` at `n` equally spaced points.
pub fn real_grid(n: usize) -> Vec<Complex64> {
    (0..n).map(|i| Complex64::new(i as f64 / (n - 1) as f64, 0.0)).collect()
}

/// Closed-disk polar grid; the origin appears once.
pub fn polar_grid(radial: usize, angular: usize) -> Vec<Complex64> {
    polar_grid_arc(radial, angular, angular)
}

/// Polar grid restricted to `Im ζ ≥ 0` (angles `2πj/angular`, `j ≤ angular/2`).
pub fn upper_polar_grid(radial: usize, angular: usize) -> Vec<Complex64> {
    polar_grid_arc(radial, angular, angular / 2 + 1)
}

fn polar_grid_arc(radial: usize, angular: usize, count: usize) -> Vec<Complex64> {
    let mut grid = alloc::vec![Complex64::new(0.0, 0.0)];
    for i in 1..radial {
        let r = i as f64 / (radial - 1) as f64;
        grid.extend((0..count).map(|j| Complex64::from_polar(r, 2.0 * PI * j as f64 / angular as f64)));
    }
    grid
}

/// `angular` equally spaced points of the unit circle.
pub fn ring_grid(angular: usize) -> Vec<Complex64> {
    (0..angular).map(|j| Complex64::from_polar(1.0, 2.0 * PI * j as f64 / angular as f64)).collect()
}

/// Coefficient formulas a sweep goes through.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Route {
    /// `ζ → p` (Carathéodory parameters) `→ a`.
    Caratheodory,
    /// `ζ → b` (Schwarz coefficients via the Schur algorithm) `→ a`.
    Schwarz,
}

/// Quantity whose modulus is bounded.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", content = "id", rename_all = "snake_case"))]
pub enum Target {
    Functional(FunctionalId),
    /// `a_n`, `2 ≤ n ≤ 5`.
    Coefficient(usize),
    /// `γ_n`, `1 ≤ n ≤ 3`.
    LogCoefficient(usize),
}

impl Target {
    pub fn name(&self) -> String {
        match self {
            Target::Functional(id) => id.slug(),
            Target::Coefficient(n) => format!("a{n}"),
            Target::LogCoefficient(n) => format!("gamma{n}"),
        }
    }

    /// Number of leading Schur parameters the quantity depends on.
    pub fn depth(&self) -> Result<usize> {
        Ok(match *self {
            Target::Coefficient(n @ 2..=5) => n - 1,
            Target::LogCoefficient(n @ 1..=3) => n,
            Target::Functional(id) => match id {
                FunctionalId::T21 => 1,
                FunctionalId::FeketeSzego { .. }
                | FunctionalId::H21
                | FunctionalId::T22
                | FunctionalId::T21Log
                | FunctionalId::T21InvLog => 2,
                FunctionalId::H22 | FunctionalId::H21Log | FunctionalId::H21InvLog | FunctionalId::T23 => 3,
                FunctionalId::Hankel { .. } | FunctionalId::Toeplitz { .. } => {
                    return Err(Error::InvalidConfig("generic determinants carry no sharp bound to certify"))
                }
            },
            _ => return Err(Error::InvalidConfig("coefficient index out of range")),
        })
    }

    pub fn rotation_invariant(&self) -> bool {
        match self {
            Target::Functional(id) => id.is_rotation_invariant(),
            _ => true,
        }
    }

    pub fn route(&self) -> Route {
        match self {
            Target::Functional(
                FunctionalId::T21
                | FunctionalId::T22
                | FunctionalId::T23
                | FunctionalId::T21Log
                | FunctionalId::T21InvLog,
            )
            | Target::Coefficient(5) => Route::Schwarz,
            _ => Route::Caratheodory,
        }
    }

    /// The sharp bound claimed for `|target|`.
    pub fn bound(&self) -> Result<ExactBound> {
        Ok(match *self {
            Target::Coefficient(2) => ExactBound::new(1, 1),
            Target::Coefficient(3) => ExactBound::new(3, 4),
            Target::Coefficient(4) => ExactBound::new(19, 36),
            Target::Coefficient(5) => ExactBound::new(101, 288),
            Target::LogCoefficient(1) => ExactBound::new(1, 2),
            Target::LogCoefficient(2) => ExactBound::new(1, 4),
            Target::LogCoefficient(3) => ExactBound::new(1, 8),
            Target::Functional(id) => match id {
                FunctionalId::FeketeSzego { mu } => fekete_szego_bound(mu),
                FunctionalId::H21 => ExactBound::new(1, 2),
                FunctionalId::H22 => ExactBound::new(1, 4),
                FunctionalId::H21Log => ExactBound::new(1, 16),
                FunctionalId::H21InvLog => ExactBound::new(43, 576),
                FunctionalId::T21 => ExactBound::new(2, 1),
                FunctionalId::T22 => ExactBound::new(25, 16),
                FunctionalId::T23 => ExactBound::new(545, 648),
                FunctionalId::T21Log => ExactBound::new(17, 64),
                FunctionalId::T21InvLog => ExactBound::new(25, 64),
                _ => return Err(Error::InvalidConfig("generic determinants carry no sharp bound to certify")),
            },
            _ => return Err(Error::InvalidConfig("coefficient index out of range")),
        })
    }

    /// The extremal function at which the bound is claimed to be attained.
    pub fn extremal(&self) -> Extremal {
        match *self {
            Target::Coefficient(_) | Target::LogCoefficient(1) => Extremal::F1,
            Target::LogCoefficient(_) => Extremal::F2,
            Target::Functional(id) => match id {
                FunctionalId::FeketeSzego { mu } if (mu - 0.75).norm() > 1.0 => Extremal::F1,
                FunctionalId::H21InvLog => Extremal::F1,
                FunctionalId::FeketeSzego { .. } | FunctionalId::H21 | FunctionalId::H22 | FunctionalId::H21Log => {
                    Extremal::F2
                }
                _ => Extremal::F3,
            },
        }
    }

    /// `|target|` for one coefficient set.
    #[inline]
    pub fn modulus(&self, c: &CoefficientSet) -> f64 {
        match *self {
            Target::Coefficient(2) => c.a2.norm(),
            Target::Coefficient(3) => c.a3.norm(),
            Target::Coefficient(4) => c.a4.norm(),
            Target::Coefficient(5) => c.a5.map_or(f64::NAN, |a| a.norm()),
            Target::LogCoefficient(1) => c.gamma1.norm(),
            Target::LogCoefficient(2) => c.gamma2.norm(),
            Target::LogCoefficient(3) => c.gamma3.norm(),
            Target::Functional(id) => id.evaluate(c).map_or(f64::NAN, |v| v.norm()),
            _ => f64::NAN,
        }
    }
}

/// `½ max{1, |μ − 3/4|}`.
pub fn fekete_szego_bound(mu: Complex64) -> ExactBound {
    let d = (mu - 0.75).norm();
    if d <= 1.0 {
        ExactBound::new(1, 2)
    } else {
        ExactBound::approximate(0.5 * d)
    }
}

/// Parameter sets a sweep visits: the Cartesian product `ζ₁ × ζ₂ × ζ₃`.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamGrid {
    pub zeta1: Vec<Complex64>,
    pub zeta2: Vec<Complex64>,
    pub zeta3: Vec<Complex64>,
}

impl ParamGrid {
    /// Grid for `target`: real `ζ₁` for rotation-invariant targets, the upper
    /// half-disk otherwise (values at conjugate parameters are conjugate);
    /// parameters beyond the target's depth are fixed at 0. The last
    /// parameter runs over the unit circle when `ζ₁` is complex.
    pub fn for_target(target: &Target, cfg: &SweepConfig) -> Result<Self> {
        let depth = target.depth()?;
        let invariant = target.rotation_invariant();
        let zero = alloc::vec![Complex64::new(0.0, 0.0)];
        let polar = || polar_grid(cfg.radial_points, cfg.angular_points);
        let zeta1 = if invariant {
            real_grid(cfg.zeta1_points)
        } else {
            upper_polar_grid(cfg.radial_points, cfg.angular_points)
        };
        let zeta2 = if depth >= 2 { polar() } else { zero.clone() };
        let zeta3 = match (depth >= 3, invariant) {
            (false, _) => zero,
            (true, true) => polar(),
            (true, false) => ring_grid(cfg.angular_points),
        };
        Ok(ParamGrid { zeta1, zeta2, zeta3 })
    }

    pub fn len(&self) -> usize {
        self.zeta1.len() * self.zeta2.len() * self.zeta3.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Maximum of a sweep with its first (lexicographically smallest) maximizer.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SweepMax {
    pub value: f64,
    /// Schur parameters `ζ₁, ζ₂, …` of the maximizer.
    pub argmax: Vec<Complex64>,
    /// Position of the maximizer in the sweep's enumeration order.
    pub index: u64,
    pub evaluations: u64,
}

impl SweepMax {
    fn empty() -> Self {
        SweepMax { value: f64::NEG_INFINITY, argmax: Vec::new(), index: u64::MAX, evaluations: 0 }
    }

    /// Merge of two partial sweeps: larger value wins, ties go to the lower index.
    pub fn merge(self, other: SweepMax) -> SweepMax {
        let evaluations = self.evaluations + other.evaluations;
        let better = other.value > self.value || (other.value == self.value && other.index < self.index);
        let winner = if better { other } else { self };
        SweepMax { evaluations, ..winner }
    }
}

/// Initial coefficients from Schur parameters through the given route.
#[inline]
pub fn coefficients_via(route: Route, z1: Complex64, z2: Complex64, z3: Complex64) -> [Complex64; 3] {
    match route {
        Route::Caratheodory => {
            let [p1, p2, p3] = lemma1_coefficients(z1, z2, z3);
            a_from_p(p1, p2, p3)
        }
        Route::Schwarz => {
            let [b1, b2, b3] = schur_prefix3(z1, z2, z3);
            a_from_b(b1, b2, b3)
        }
    }
}

/// Maximum of `|target|` over `grid`.
pub fn sweep_grid(target: &Target, route: Route, grid: &ParamGrid) -> SweepMax {
    let mut best = SweepMax::empty();
    let mut index = 0u64;
    for &z1 in &grid.zeta1 {
        for &z2 in &grid.zeta2 {
            for &z3 in &grid.zeta3 {
                let [a2, a3, a4] = coefficients_via(route, z1, z2, z3);
                let v = target.modulus(&full_coefficient_set(a2, a3, a4, None));
                if v > best.value {
                    best.value = v;
                    best.index = index;
                    best.argmax = alloc::vec![z1, z2, z3];
                }
                index += 1;
            }
        }
    }
    best.evaluations = index;
    best
}

/// `|a₅|` over `ζ₁ ∈ [0,1]`, `ζ₂, ζ₃` on the half-resolution disk grid and `ζ₄` on the unit circle.
pub fn sweep_a5(cfg: &SweepConfig) -> SweepMax {
    let half = cfg.half_resolution();
    let disk = polar_grid(half.radial_points, half.angular_points);
    let ring = ring_grid(half.angular_points);
    let mut best = SweepMax::empty();
    let mut index = 0u64;
    for &z1 in &real_grid(cfg.zeta1_points) {
        for &z2 in &disk {
            for &z3 in &disk {
                for &z4 in &ring {
                    let v = a5_from_b(schur_prefix4([z1, z2, z3, z4])).norm();
                    if v > best.value {
                        best.value = v;
                        best.index = index;
                        best.argmax = alloc::vec![z1, z2, z3, z4];
                    }
                    index += 1;
                }
            }
        }
    }
    best.evaluations = index;
    best
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Verdict {
    Certified,
    Violated,
    NotAttained,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Certified => "certified",
            Verdict::Violated => "violated",
            Verdict::NotAttained => "not-attained",
        }
    }
}

impl core::fmt::Display for Verdict {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.label())
    }
}

/// Outcome of certifying one bound.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoundCheck {
    pub name: String,
    pub target: Target,
    pub route: Route,
    pub bound: ExactBound,
    /// Largest `|target|` seen in the sweep.
    pub observed: f64,
    pub argmax: Vec<Complex64>,
    pub evaluations: u64,
    pub extremal: Extremal,
    /// `|target|` at the extremal function, computed from its series.
    pub extremal_value: f64,
    pub verdict: Verdict,
}

impl BoundCheck {
    fn new(target: Target, route: Route, sweep: SweepMax, cfg: &SweepConfig) -> Result<Self> {
        let bound = target.bound()?;
        let extremal = target.extremal();
        let member = extremal.member(cfg.order.max(6))?;
        let extremal_value = target.modulus(&member.coefficient_set()?);
        let verdict = verdict(bound.value, sweep.value, extremal_value, cfg);
        Ok(BoundCheck {
            name: target.name(),
            target,
            route,
            bound,
            observed: sweep.value,
            argmax: sweep.argmax,
            evaluations: sweep.evaluations,
            extremal,
            extremal_value,
            verdict,
        })
    }

    pub fn certified(&self) -> bool {
        self.verdict == Verdict::Certified
    }
}

/// `violated` if anything exceeds `bound + tol_upper`; `not-attained` if the
/// sweep stays below `bound − tol_sharp` or the extremal misses the bound by
/// more than [`ATTAINMENT_TOL`]; `certified` otherwise.
pub fn verdict(bound: f64, observed: f64, extremal_value: f64, cfg: &SweepConfig) -> Verdict {
    if !(observed <= bound + cfg.tol_upper) || !(extremal_value <= bound + cfg.tol_upper) {
        Verdict::Violated
    } else if observed < bound - cfg.tol_sharp || (extremal_value - bound).abs() > ATTAINMENT_TOL {
        Verdict::NotAttained
    } else {
        Verdict::Certified
    }
}

/// Sweep `target` through its own route and certify its bound.
pub fn sweep_bound(target: &Target, cfg: &SweepConfig) -> Result<BoundCheck> {
    cfg.validate()?;
    let route = target.route();
    let sweep = if *target == Target::Coefficient(5) {
        sweep_a5(cfg)
    } else {
        sweep_grid(target, route, &ParamGrid::for_target(target, cfg)?)
    };
    BoundCheck::new(*target, route, sweep, cfg)
}

pub fn sweep_functional(id: FunctionalId, cfg: &SweepConfig) -> Result<BoundCheck> {
    sweep_bound(&Target::Functional(id), cfg)
}

/// The ten determinant and Fekete–Szegő theorems.
pub fn audit_theorems(cfg: &SweepConfig) -> Result<Vec<BoundCheck>> {
    FunctionalId::NAMED.iter().map(|id| sweep_functional(*id, cfg)).collect()
}

/// `|a₂| ≤ 1`, `|a₃| ≤ 3/4`, `|a₄| ≤ 19/36`, `|a₅| ≤ 101/288`.
pub fn audit_initial_coefficients(cfg: &SweepConfig) -> Result<Vec<BoundCheck>> {
    (2..=5).map(|n| sweep_bound(&Target::Coefficient(n), cfg)).collect()
}

/// `|γ₁| ≤ 1/2`, `|γ₂| ≤ 1/4`, `|γ₃| ≤ 1/8`.
pub fn audit_log_coefficients(cfg: &SweepConfig) -> Result<Vec<BoundCheck>> {
    (1..=3).map(|n| sweep_bound(&Target::LogCoefficient(n), cfg)).collect()
}

/// `|a₃ − μa₂²| ≤ ½ max{1, |μ − 3/4|}` for each `μ`.
pub fn audit_fekete_szego(mus: &[Complex64], cfg: &SweepConfig) -> Result<Vec<BoundCheck>> {
    mus.iter().map(|&mu| sweep_functional(FunctionalId::FeketeSzego { mu }, cfg)).collect()
}

/// Location and value of a one-dimensional maximum.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Maximum {
    pub at: f64,
    pub value: f64,
}

/// Maximum of `f` on `[lo, hi]`: dense grid, then golden-section refinement
/// around the best grid point.
pub fn maximize_1d(f: impl Fn(f64) -> f64, lo: f64, hi: f64, points: usize) -> Maximum {
    let points = points.max(3);
    let h = (hi - lo) / (points - 1) as f64;
    let x_at = |i: usize| if i == points - 1 { hi } else { lo + h * i as f64 };
    let mut best = Maximum { at: lo, value: f(lo) };
    let mut best_i = 0;
    for i in 1..points {
        let x = x_at(i);
        let v = f(x);
        if v > best.value {
            best = Maximum { at: x, value: v };
            best_i = i;
        }
    }
    let (mut a, mut b) = (x_at(best_i.saturating_sub(1)), x_at((best_i + 1).min(points - 1)));
    let g = 0.5 * (5.0f64.sqrt() - 1.0);
    for _ in 0..100 {
        if b - a <= 1e-15 {
            break;
        }
        let (c, d) = (b - g * (b - a), a + g * (b - a));
        if f(c) >= f(d) {
            b = d;
        } else {
            a = c;
        }
    }
    let mid = 0.5 * (a + b);
    let v = f(mid);
    if v > best.value {
        best = Maximum { at: mid, value: v };
    }
    best
}

/// One envelope maximization compared against its quoted value.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EnvelopeCheck {
    pub name: String,
    pub interval: (f64, f64),
    pub quoted_max: f64,
    pub located: Maximum,
    pub deviation: f64,
    pub passed: bool,
}

/// Consistency of a quoted prefactor and branch with the quoted envelope.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PrefactorNote {
    pub case: ProofCase,
    pub quoted_prefactor: f64,
    pub prefactor: f64,
    /// `max |quoted envelope − quoted prefactor · ζ(1−ζ²)(|A|+|B|+|C|)|`.
    pub quoted_form_residual: f64,
    /// `max |quoted envelope − prefactor · ζ(1−ζ²)·(branch formula)|`.
    pub derived_form_residual: f64,
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EnvelopeReport {
    pub checks: Vec<EnvelopeCheck>,
    pub notes: Vec<PrefactorNote>,
    /// Maximum of the quoted second `h21-log` envelope on `[ζ′, 1]`.
    pub quoted_log_second_envelope: Maximum,
}

impl EnvelopeReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

const ENVELOPE_TOL: f64 = 1e-6;
const ENVELOPE_POINTS: usize = 100_001;

fn envelope_check(name: &str, f: impl Fn(f64) -> f64, interval: (f64, f64), quoted_max: f64) -> EnvelopeCheck {
    let located = maximize_1d(f, interval.0, interval.1, ENVELOPE_POINTS);
    let deviation = (located.value - quoted_max).abs();
    EnvelopeCheck { name: name.into(), interval, quoted_max, located, deviation, passed: deviation <= ENVELOPE_TOL }
}

/// Maximizes the envelopes of the `h22`, `h21-log` and `h21-invlog` reductions.
pub fn audit_envelopes() -> EnvelopeReport {
    let log = ProofCase::H21Log;
    let inv = ProofCase::H21InvLog;
    let zl = log.zeta_prime().expect("defined");
    let zi = inv.zeta_prime().expect("defined");
    let checks = alloc::vec![
        envelope_check("h22:first", |z| ProofCase::H22.first_envelope(z), (0.0, 1.0), 0.25),
        envelope_check("h21-log:first", |z| log.first_envelope(z), (0.0, 1.0), 1.0 / 16.0),
        envelope_check("h21-invlog:first", |z| inv.first_envelope(z), (0.0, 1.0), 31.0 / 460.0),
        envelope_check("h21-log:second", |z| log.second_envelope(z).expect("defined"), (zl, 1.0), 0.0516512),
        envelope_check("h21-invlog:second", |z| inv.second_envelope(z).expect("defined"), (zi, 1.0), 43.0 / 576.0),
    ];
    let notes = ProofCase::ALL
        .iter()
        .map(|&case| {
            let mut quoted_res = 0.0f64;
            let mut derived_res = 0.0f64;
            for i in 1..1000 {
                let z = i as f64 / 1000.0;
                let y = case.abc(z).expect("interior");
                let claimed = case.quoted_prefactor() * z * (1.0 - z * z) * (y.a.abs() + y.b.abs() + y.c.abs());
                let env = case.first_envelope(z);
                quoted_res = quoted_res.max((env - claimed).abs());
                derived_res = derived_res.max((env - case.first_envelope_from_abc(z).expect("interior")).abs());
            }
            PrefactorNote {
                case,
                quoted_prefactor: case.quoted_prefactor(),
                prefactor: case.prefactor(),
                quoted_form_residual: quoted_res,
                derived_form_residual: derived_res,
                consistent: quoted_res <= 1e-12,
            }
        })
        .collect();
    let quoted_log_second_envelope =
        maximize_1d(|z| log.quoted_second_envelope(z).expect("defined"), zl, 1.0, ENVELOPE_POINTS);
    EnvelopeReport { checks, notes, quoted_log_second_envelope }
}

/// The surface bounding `1296·|T₂,₃|` with `|b₁| = x`, `|b₂| = y`, as usually quoted.
pub fn m_surface(x: f64, y: f64) -> f64 {
    m_surface_with(x, y, 342.0)
}

/// The same surface with the coefficient of `(1 − x²)²` set to `k`
/// (`k = 324` is the value the expansion of `1296·T₂,₃` produces).
pub fn m_surface_with(x: f64, y: f64, k: f64) -> f64 {
    let x2 = x * x;
    let x4 = x2 * x2;
    let s = 1.0 - x2 - y * y / (1.0 + x);
    361.0 * x4 * x2
        + 729.0 * x4
        + 1140.0 * x4 * (1.0 - x2)
        + 972.0 * x2 * (1.0 - x2)
        + k * (1.0 - x2) * (1.0 - x2)
        + 900.0 * x2 * y * y
        + 456.0 * x2 * x * s
        + 720.0 * x * y * s
        + 144.0 * s * s
}

/// `M(x, 0)` as separately quoted: `361x⁶ + 729x⁴ − 456x⁵ + 456x³ + 144(1 − x²)²`.
pub fn quoted_m_on_x_axis(x: f64) -> f64 {
    let x2 = x * x;
    361.0 * x2 * x2 * x2 + 729.0 * x2 * x2 - 456.0 * x2 * x2 * x + 456.0 * x2 * x + 144.0 * (1.0 - x2) * (1.0 - x2)
}

/// `M(0, y)` as separately quoted: `144y⁴ + 54y² + 144`.
pub fn quoted_m_on_y_axis(y: f64) -> f64 {
    let y2 = y * y;
    144.0 * y2 * y2 + 54.0 * y2 + 144.0
}

#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SurfacePoint {
    pub x: f64,
    pub y: f64,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MSurfaceReport {
    pub grid: usize,
    pub quoted_max: f64,
    /// Maximum of `M` over `0 ≤ x ≤ 1`, `0 ≤ y ≤ 1 − x²`, refined locally.
    pub located: SurfacePoint,
    pub at_corner: f64,
    pub at_origin: f64,
    pub at_top: f64,
    /// Maxima of `M` along `y = 0`, `x = 0` and `y = 1 − x²`.
    pub on_x_axis: Maximum,
    pub on_y_axis: Maximum,
    pub on_parabola: Maximum,
    /// Maxima of the separately quoted edge polynomials.
    pub quoted_x_axis: Maximum,
    pub quoted_y_axis: Maximum,
    /// Maximum with the `(1 − x²)²` coefficient 324.
    pub expanded_max: SurfacePoint,
    /// Located maximum over 1296, minus `545 / 648`.
    pub ratio_residual: f64,
    pub max_passed: bool,
    pub edges_passed: bool,
}

impl MSurfaceReport {
    pub fn passed(&self) -> bool {
        self.max_passed && self.edges_passed
    }
}

fn maximize_surface(f: impl Fn(f64, f64) -> f64, grid: usize) -> SurfacePoint {
    let mut best = SurfacePoint { x: 0.0, y: 0.0, value: f(0.0, 0.0) };
    for i in 0..=grid {
        let x = i as f64 / grid as f64;
        let top = 1.0 - x * x;
        for j in 0..=grid {
            let y = top * j as f64 / grid as f64;
            let v = f(x, y);
            if v > best.value {
                best = SurfacePoint { x, y, value: v };
            }
        }
    }
    let clamp = |x: f64, y: f64| {
        let x = x.clamp(0.0, 1.0);
        (x, y.clamp(0.0, 1.0 - x * x))
    };
    let mut step = 1.0 / grid as f64;
    while step > 1e-13 {
        let mut moved = false;
        for (dx, dy) in
            [(1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0), (1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)]
        {
            let (x, y) = clamp(best.x + dx * step, best.y + dy * step);
            let v = f(x, y);
            if v > best.value {
                best = SurfacePoint { x, y, value: v };
                moved = true;
            }
        }
        if !moved {
            step *= 0.5;
        }
    }
    best
}

/// Evaluates the quoted surface on its region and checks the claimed maximum
/// 1090 at `(1, 0)` and the edge maxima 1090 and 342.
pub fn audit_m_surface(grid: usize) -> Result<MSurfaceReport> {
    if grid < 100 {
        return Err(Error::InvalidConfig("surface grid must be at least 100"));
    }
    let located = maximize_surface(m_surface, grid);
    let points = 20 * grid + 1;
    let on_x_axis = maximize_1d(|x| m_surface(x, 0.0), 0.0, 1.0, points);
    let on_y_axis = maximize_1d(|y| m_surface(0.0, y), 0.0, 1.0, points);
    let on_parabola = maximize_1d(|x| m_surface(x, 1.0 - x * x), 0.0, 1.0, points);
    let quoted_x_axis = maximize_1d(quoted_m_on_x_axis, 0.0, 1.0, points);
    let quoted_y_axis = maximize_1d(quoted_m_on_y_axis, 0.0, 1.0, points);
    let expanded_max = maximize_surface(|x, y| m_surface_with(x, y, 324.0), grid);
    let max_passed = (located.value - 1090.0).abs() <= 1e-6 && located.x == 1.0 && located.y == 0.0;
    let edges_passed = on_x_axis.value <= 1090.0 + 1e-6
        && on_y_axis.value <= 342.0 + 1e-6
        && on_parabola.value <= 1090.0 + 1e-6
        && (quoted_x_axis.value - 1090.0).abs() <= 1e-6
        && (quoted_y_axis.value - 342.0).abs() <= 1e-6;
    Ok(MSurfaceReport {
        grid,
        quoted_max: 1090.0,
        located,
        at_corner: m_surface(1.0, 0.0),
        at_origin: m_surface(0.0, 0.0),
        at_top: m_surface(0.0, 1.0),
        on_x_axis,
        on_y_axis,
        on_parabola,
        quoted_x_axis,
        quoted_y_axis,
        expanded_max,
        ratio_residual: located.value / 1296.0 - 545.0 / 648.0,
        max_passed,
        edges_passed,
    })
}

/// Rotation-invariant functionals swept with complex `ζ₁` against the real-`ζ₁` sweep.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct RotationCheck {
    pub name: String,
    pub real_sup: f64,
    pub complex_sup: f64,
    pub excess: f64,
    pub passed: bool,
}

/// Coarse complex-`ζ₁` sweep for `h22`, `h21-log`, `h21-invlog`.
pub fn rotation_spot_check(cfg: &SweepConfig) -> Result<Vec<RotationCheck>> {
    cfg.validate()?;
    let coarse = cfg.half_resolution();
    [FunctionalId::H22, FunctionalId::H21Log, FunctionalId::H21InvLog]
        .iter()
        .map(|&id| {
            let target = Target::Functional(id);
            let real = sweep_grid(&target, Route::Caratheodory, &ParamGrid::for_target(&target, cfg)?);
            let grid = ParamGrid {
                zeta1: polar_grid(coarse.radial_points, coarse.angular_points),
                zeta2: polar_grid(coarse.radial_points, coarse.angular_points),
                zeta3: ring_grid(coarse.angular_points),
            };
            let complex = sweep_grid(&target, Route::Caratheodory, &grid);
            let excess = complex.value - real.value;
            Ok(RotationCheck {
                name: id.slug(),
                real_sup: real.value,
                complex_sup: complex.value,
                excess,
                passed: excess <= cfg.tol_sharp,
            })
        })
        .collect()
}

/// Agreement of the three ways of getting `a₂ … a₄` (and `a₅`) from Schur parameters.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CrossRouteReport {
    pub samples: usize,
    /// `max |a(p-route) − a(b-route)|` over all samples.
    pub closed_form_gap: f64,
    pub series_samples: usize,
    /// `max |a(closed form) − a(series)|` over the series samples.
    pub series_gap: f64,
    pub passed: bool,
}

pub fn cross_route_check(cfg: &SweepConfig) -> Result<CrossRouteReport> {
    cfg.validate()?;
    let disk = polar_grid(4, 8);
    let mut closed_form_gap = 0.0f64;
    let mut series_gap = 0.0f64;
    let mut samples = 0;
    let mut series_samples = 0;
    for (i, &z1) in disk.iter().enumerate() {
        for (j, &z2) in disk.iter().enumerate() {
            for (k, &z3) in disk.iter().enumerate() {
                let via_p = coefficients_via(Route::Caratheodory, z1, z2, z3);
                let via_b = coefficients_via(Route::Schwarz, z1, z2, z3);
                for (x, y) in via_p.iter().zip(&via_b) {
                    closed_form_gap = closed_form_gap.max((x - y).norm());
                }
                samples += 1;
                if (i + 2 * j + 3 * k) % 97 == 0 {
                    let z4 = disk[(i + j + k) % disk.len()];
                    let w = schur_chain_series(&[z1, z2, z3, z4], cfg.order - 1);
                    let member = member_from_schwarz(&w, cfg.order)?;
                    for (n, a) in via_b.iter().enumerate() {
                        series_gap = series_gap.max((member.f[n + 2] - a).norm());
                    }
                    let a5 = a5_from_b(schur_prefix4([z1, z2, z3, z4]));
                    series_gap = series_gap.max((member.f[5] - a5).norm());
                    series_samples += 1;
                }
            }
        }
    }
    Ok(CrossRouteReport {
        samples,
        closed_form_gap,
        series_samples,
        series_gap,
        passed: closed_form_gap <= 1e-12 && series_gap <= 1e-10,
    })
}

/// `|T₂,₃|` over the box `|b₁| ≤ 1`, `|b₂| ≤ 1 − |b₁|²`,
/// `|b₃| ≤ 1 − |b₁|² − |b₂|²/(1 + |b₁|)`, which contains the coefficient body.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoxDiagnostic {
    pub evaluations: u64,
    pub sup: f64,
    pub argmax: Vec<Complex64>,
    pub bound: ExactBound,
    /// `sup − bound`; positive when the box reaches beyond the bound.
    pub excess: f64,
}

pub fn lemma5_box_diagnostic(cfg: &SweepConfig) -> Result<BoxDiagnostic> {
    cfg.validate()?;
    let half = cfg.half_resolution();
    let (n, ang) = (half.radial_points, half.angular_points);
    let target = Target::Functional(FunctionalId::T23);
    let mut best = SweepMax::empty();
    let mut index = 0u64;
    let upper: Vec<Complex64> =
        (0..=ang / 2).map(|j| Complex64::from_polar(1.0, 2.0 * PI * j as f64 / ang as f64)).collect();
    let ring = ring_grid(ang);
    for x in real_grid(cfg.zeta1_points).iter().map(|z| z.re) {
        let r2_max = 1.0 - x * x;
        for &u1 in &upper {
            let b1 = u1 * x;
            for i in 0..n {
                let y = r2_max * i as f64 / (n - 1) as f64;
                let r3 = (1.0 - x * x - y * y / (1.0 + x)).max(0.0);
                for &u2 in &ring {
                    let b2 = u2 * y;
                    for &u3 in &ring {
                        let b3 = u3 * r3;
                        let [a2, a3, a4] = a_from_b(b1, b2, b3);
                        let v = target.modulus(&full_coefficient_set(a2, a3, a4, None));
                        if v > best.value {
                            best.value = v;
                            best.index = index;
                            best.argmax = alloc::vec![b1, b2, b3];
                        }
                        index += 1;
                    }
                }
            }
        }
    }
    let bound = target.bound()?;
    Ok(BoxDiagnostic {
        evaluations: index,
        sup: best.value,
        argmax: best.argmax,
        bound,
        excess: best.value - bound.value,
    })
}

/// Everything [`full_report`] runs, in one bundle.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FullReport {
    pub config: SweepConfig,
    pub theorems: Vec<BoundCheck>,
    pub coefficients: Vec<BoundCheck>,
    pub log_coefficients: Vec<BoundCheck>,
    pub fekete_szego: Vec<BoundCheck>,
    pub envelopes: EnvelopeReport,
    pub scalar_audits: Vec<ScalarAudit>,
    pub m_surface: MSurfaceReport,
    pub rotation: Vec<RotationCheck>,
    pub cross_route: CrossRouteReport,
    pub lemma5_box: BoxDiagnostic,
}

impl FullReport {
    pub fn checks(&self) -> impl Iterator<Item = &BoundCheck> {
        self.theorems.iter().chain(&self.coefficients).chain(&self.log_coefficients).chain(&self.fekete_szego)
    }

    /// Whether every bound check is certified.
    pub fn all_certified(&self) -> bool {
        self.checks().all(BoundCheck::certified)
    }

    /// Whether every audit beyond the bound checks passed.
    pub fn audits_passed(&self) -> bool {
        self.envelopes.passed()
            && self.scalar_audits.iter().all(ScalarAudit::passed)
            && self.m_surface.passed()
            && self.rotation.iter().all(|r| r.passed)
            && self.cross_route.passed
    }
}

/// Grid for [`audit_m_surface`] inside [`full_report`].
pub const DEFAULT_SURFACE_GRID: usize = 1000;
/// `ζ₁` points for [`audit_proof_scalars`] inside [`full_report`].
pub const DEFAULT_SCALAR_POINTS: usize = 10_000;

pub fn full_report(cfg: &SweepConfig, mus: &[Complex64]) -> Result<FullReport> {
    cfg.validate()?;
    Ok(FullReport {
        config: *cfg,
        theorems: audit_theorems(cfg)?,
        coefficients: audit_initial_coefficients(cfg)?,
        log_coefficients: audit_log_coefficients(cfg)?,
        fekete_szego: audit_fekete_szego(mus, cfg)?,
        envelopes: audit_envelopes(),
        scalar_audits: ProofCase::ALL.iter().map(|&c| audit_proof_scalars(c, DEFAULT_SCALAR_POINTS)).collect(),
        m_surface: audit_m_surface(DEFAULT_SURFACE_GRID)?,
        rotation: rotation_spot_check(cfg)?,
        cross_route: cross_route_check(cfg)?,
        lemma5_box: lemma5_box_diagnostic(cfg)?,
    })
}
