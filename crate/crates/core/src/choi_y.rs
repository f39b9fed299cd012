//! The piecewise maximum
//! `Y(A, B, C) = max_{|z| ≤ 1} (|A + Bz + Cz²| + 1 − |z|²)` for real `A, B, C`,
//! a grid oracle for it, and the `(A, B, C)` triples that bound the
//! second Hankel functionals after the first Schur parameter is fixed.

use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct YInput {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl YInput {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        for (what, v) in [("A must be finite", a), ("B must be finite", b), ("C must be finite", c)] {
            if !v.is_finite() {
                return Err(Error::DomainError { what, value: v });
            }
        }
        Ok(YInput { a, b, c })
    }

    /// `|A + Bz + Cz²| + 1 − |z|²`.
    pub fn objective(&self, re: f64, im: f64) -> f64 {
        let (z2re, z2im) = (re * re - im * im, 2.0 * re * im);
        let pre = self.a + self.b * re + self.c * z2re;
        let pim = self.b * im + self.c * z2im;
        pre.hypot(pim) + 1.0 - (re * re + im * im)
    }

    fn scaled(&self, other: &YInput, t: f64) -> YInput {
        YInput {
            a: self.a + t * (other.a - self.a),
            b: self.b + t * (other.b - self.b),
            c: self.c + t * (other.c - self.c),
        }
    }
}

/// Which formula produced `Y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum YBranch {
    /// `AC ≥ 0`, `|B| ≥ 2(1 − |C|)`: `|A| + |B| + |C|`.
    SameSignLarge,
    /// `AC ≥ 0`, `|B| < 2(1 − |C|)`: `1 + |A| + B²/(4(1 − |C|))`.
    SameSignSmall,
    /// `AC < 0`: `1 − |A| + B²/(4(1 − |C|))`.
    OppositeFirst,
    /// `AC < 0`: `1 + |A| + B²/(4(1 + |C|))`.
    OppositeSecond,
    /// `R = |A| + |B| − |C|`.
    RFirst,
    /// `R = −|A| + |B| + |C|`.
    RSecond,
    /// `R = (|C| + |A|)√(1 − B²/(4AC))`.
    RThird,
}

impl YBranch {
    pub const ALL: [YBranch; 7] = [
        YBranch::SameSignLarge,
        YBranch::SameSignSmall,
        YBranch::OppositeFirst,
        YBranch::OppositeSecond,
        YBranch::RFirst,
        YBranch::RSecond,
        YBranch::RThird,
    ];

    pub fn label(self) -> &'static str {
        match self {
            YBranch::SameSignLarge => "case1:|A|+|B|+|C|",
            YBranch::SameSignSmall => "case1:1+|A|+B^2/(4(1-|C|))",
            YBranch::OppositeFirst => "case2:1-|A|+B^2/(4(1-|C|))",
            YBranch::OppositeSecond => "case2:1+|A|+B^2/(4(1+|C|))",
            YBranch::RFirst => "case2:R=|A|+|B|-|C|",
            YBranch::RSecond => "case2:R=-|A|+|B|+|C|",
            YBranch::RThird => "case2:R=(|C|+|A|)sqrt(1-B^2/(4AC))",
        }
    }

    /// The branch formula, or `None` where it is undefined.
    pub fn formula(self, y: &YInput) -> Option<f64> {
        let (a, b, c) = (y.a.abs(), y.b.abs(), y.c.abs());
        let bsq = y.b * y.b;
        let v = match self {
            YBranch::SameSignLarge => a + b + c,
            YBranch::SameSignSmall => 1.0 + a + bsq / (4.0 * (1.0 - c)),
            YBranch::OppositeFirst => 1.0 - a + bsq / (4.0 * (1.0 - c)),
            YBranch::OppositeSecond => 1.0 + a + bsq / (4.0 * (1.0 + c)),
            YBranch::RFirst => a + b - c,
            YBranch::RSecond => -a + b + c,
            YBranch::RThird => (c + a) * (1.0 - bsq / (4.0 * y.a * y.c)).sqrt(),
        };
        v.is_finite().then_some(v)
    }
}

impl core::fmt::Display for YBranch {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct YResult {
    pub value: f64,
    pub branch: YBranch,
}

/// Relative width of the band in which a branch condition counts as an equality.
pub const TIE_TOL: f64 = 1e-12;

/// One `lhs ≤ rhs` comparison, with tie detection.
#[derive(Clone, Copy)]
struct Cmp {
    holds: bool,
    tied: bool,
}

impl Cmp {
    fn le(lhs: f64, rhs: f64) -> Self {
        let scale = 1.0f64.max(lhs.abs()).max(rhs.abs());
        Cmp { holds: lhs <= rhs, tied: (lhs - rhs).abs() <= TIE_TOL * scale }
    }

    fn lt(lhs: f64, rhs: f64) -> Self {
        let c = Cmp::le(lhs, rhs);
        Cmp { holds: lhs < rhs, ..c }
    }

    fn choices(self) -> &'static [bool] {
        match (self.tied, self.holds) {
            (true, _) => &[true, false],
            (false, true) => &[true],
            (false, false) => &[false],
        }
    }
}

/// `Y(A, B, C)` in closed form. Inputs on a branch seam evaluate every
/// adjacent formula and keep the largest.
pub fn y_exact(y: &YInput) -> YResult {
    let (a, b, c) = (y.a.abs(), y.b.abs(), y.c.abs());
    let bsq = y.b * y.b;
    let mut best: Option<YResult> = None;
    let mut consider = |branch: YBranch| {
        if let Some(value) = branch.formula(y) {
            if best.map_or(true, |r| value > r.value) {
                best = Some(YResult { value, branch });
            }
        }
    };

    if y.a * y.c >= 0.0 {
        for &large in Cmp::le(2.0 * (1.0 - c), b).choices() {
            consider(if large { YBranch::SameSignLarge } else { YBranch::SameSignSmall });
        }
    } else {
        let t4 = -4.0 * y.a * y.c * (1.0 / (y.c * y.c) - 1.0);
        let d1 = Cmp::le(t4, bsq);
        let d2 = Cmp::lt(b, 2.0 * (1.0 - c));
        let d3 = Cmp::lt(bsq, 4.0 * (1.0 + c) * (1.0 + c));
        let r1 = Cmp::le(c * (b + 4.0 * a), a * b);
        let r2 = Cmp::le(a * b, c * (b - 4.0 * a));
        for &d1v in d1.choices() {
            for &d2v in d2.choices() {
                for &d3v in d3.choices() {
                    if d1v && d2v {
                        consider(YBranch::OppositeFirst);
                    } else if !d1v && d3v {
                        consider(YBranch::OppositeSecond);
                    } else {
                        for &r1v in r1.choices() {
                            for &r2v in r2.choices() {
                                consider(if r1v {
                                    YBranch::RFirst
                                } else if r2v {
                                    YBranch::RSecond
                                } else {
                                    YBranch::RThird
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    best.expect("every input selects a branch with a finite value")
}

/// Lower bound for `Y` from a polar grid: `grid` radii in `[0, 1]` and
/// `4·grid` angles. Real coefficients make the objective symmetric under
/// conjugation, so only angles in `[0, π]` are visited.
pub fn y_oracle(y: &YInput, grid: usize) -> f64 {
    let grid = grid.max(2);
    let n_angles = 4 * grid;
    let half = n_angles / 2;
    let cosines: Vec<(f64, f64)> = (0..=half)
        .map(|j| {
            let t = 2.0 * PI * j as f64 / n_angles as f64;
            (t.cos(), (2.0 * t).cos())
        })
        .collect();
    let (a, b, c) = (y.a, y.b, y.c);
    let mut best = f64::NEG_INFINITY;
    for i in 0..grid {
        let r = i as f64 / (grid - 1) as f64;
        let r2 = r * r;
        let alpha = a * a + b * b * r2 + c * c * r2 * r2;
        let beta = 2.0 * b * r * (a + c * r2);
        let gamma = 2.0 * a * c * r2;
        let q = cosines.iter().map(|&(c1, c2)| alpha + beta * c1 + gamma * c2).fold(f64::NEG_INFINITY, f64::max);
        best = best.max(q.max(0.0).sqrt() + 1.0 - r2);
    }
    best
}

/// Values of `Y` on either side of a branch seam located on a segment.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SeamProbe {
    pub seam: YInput,
    pub below: YResult,
    pub above: YResult,
    pub jump: f64,
}

/// Bisects the segment `from → to` for a change of branch and compares `Y`
/// at inputs `offset` apart straddling it. `None` if both ends share a branch.
pub fn seam_probe(from: &YInput, to: &YInput, offset: f64) -> Option<SeamProbe> {
    let start = y_exact(from).branch;
    if y_exact(to).branch == start {
        return None;
    }
    let length = ((to.a - from.a).powi(2) + (to.b - from.b).powi(2) + (to.c - from.c).powi(2)).sqrt();
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    while (hi - lo) * length > offset * 1e-2 {
        let mid = 0.5 * (lo + hi);
        if y_exact(&from.scaled(to, mid)).branch == start {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mid = 0.5 * (lo + hi);
    let dt = 0.5 * offset / length;
    let below = y_exact(&from.scaled(to, mid - dt));
    let above = y_exact(&from.scaled(to, mid + dt));
    Some(SeamProbe { seam: from.scaled(to, mid), below, above, jump: (above.value - below.value).abs() })
}

/// Largest `ζ` with `36 − 108ζ² − 47ζ⁴ ≥ 0`, i.e. `√((6/47)(8√2 − 9))`.
pub const ZETA_PRIME_LOG: f64 = 0.543_476_809_462_544_2;
/// Largest `ζ` with `60 − 212ζ² − 149ζ⁴ ≥ 0`, i.e. `√((2/149)(2√1261 − 53))`.
pub const ZETA_PRIME_INVLOG: f64 = 0.491_827_486_782_867_64;

/// The three Hankel functionals whose bound reduces to `Y` once `ζ₁ ∈ (0, 1)` is fixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum ProofCase {
    H22,
    H21Log,
    H21InvLog,
}

/// The six comparison scalars of the opposite-sign case.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ProofScalars {
    /// `|B| − 2(1 − |C|)`.
    pub t1: f64,
    /// `−4AC(1/C² − 1) − B²`.
    pub t2: f64,
    /// `4(1 + |C|)²`.
    pub t3: f64,
    /// `−4AC(1/C² − 1)`.
    pub t4: f64,
    /// `|AB| − |C|(|B| + 4|A|)`.
    pub t5: f64,
    /// `|AB| − |C|(|B| − 4|A|)`.
    pub t6: f64,
}

impl ProofScalars {
    pub fn from_abc(y: &YInput) -> Self {
        let (a, b, c) = (y.a.abs(), y.b.abs(), y.c.abs());
        let t4 = -4.0 * y.a * y.c * (1.0 / (y.c * y.c) - 1.0);
        ProofScalars {
            t1: b - 2.0 * (1.0 - c),
            t2: t4 - y.b * y.b,
            t3: 4.0 * (1.0 + c) * (1.0 + c),
            t4,
            t5: a * b - c * (b + 4.0 * a),
            t6: a * b - c * (b - 4.0 * a),
        }
    }

    pub fn as_array(&self) -> [f64; 6] {
        [self.t1, self.t2, self.t3, self.t4, self.t5, self.t6]
    }
}

fn check_open_unit(zeta1: f64) -> Result<()> {
    if zeta1 > 0.0 && zeta1 < 1.0 {
        Ok(())
    } else {
        Err(Error::DomainError { what: "zeta1 must lie in (0, 1)", value: zeta1 })
    }
}

/// `A = −5ζ³/(48(1−ζ²))`, `B = ζ/4`, `C = −(3+ζ²)/(4ζ)`.
pub fn abc_h22(zeta1: f64) -> Result<YInput> {
    ProofCase::H22.abc(zeta1)
}

/// `A = 7ζ³/(48(1−ζ²))`, `B = ζ/4`, `C = −(3+ζ²)/(4ζ)`.
pub fn abc_h21_log(zeta1: f64) -> Result<YInput> {
    ProofCase::H21Log.abc(zeta1)
}

/// `A = 43ζ³/(48(1−ζ²))`, `B = −5ζ/4`, `C = −(3+ζ²)/(4ζ)`.
pub fn abc_h21_invlog(zeta1: f64) -> Result<YInput> {
    ProofCase::H21InvLog.abc(zeta1)
}

impl ProofCase {
    pub const ALL: [ProofCase; 3] = [ProofCase::H22, ProofCase::H21Log, ProofCase::H21InvLog];

    pub fn label(self) -> &'static str {
        match self {
            ProofCase::H22 => "h22",
            ProofCase::H21Log => "h21-log",
            ProofCase::H21InvLog => "h21-invlog",
        }
    }

    pub fn abc(self, zeta1: f64) -> Result<YInput> {
        check_open_unit(zeta1)?;
        let z = zeta1;
        let z2 = z * z;
        let (a_num, b) = match self {
            ProofCase::H22 => (-5.0, z / 4.0),
            ProofCase::H21Log => (7.0, z / 4.0),
            ProofCase::H21InvLog => (43.0, -5.0 * z / 4.0),
        };
        Ok(YInput { a: a_num * z2 * z / (48.0 * (1.0 - z2)), b, c: -(3.0 + z2) / (4.0 * z) })
    }

    /// `k` in `|F| ≤ k·ζ(1 − ζ²)·Y(A, B, C)`.
    pub fn prefactor(self) -> f64 {
        match self {
            ProofCase::H22 => 1.0 / 3.0,
            ProofCase::H21Log | ProofCase::H21InvLog => 1.0 / 12.0,
        }
    }

    /// The prefactor as it is usually quoted; differs from [`Self::prefactor`] for `h21-log`.
    pub fn quoted_prefactor(self) -> f64 {
        match self {
            ProofCase::H21Log => 1.0 / 7.0,
            _ => self.prefactor(),
        }
    }

    /// The sharp bound the reduction must respect.
    pub fn bound(self) -> f64 {
        match self {
            ProofCase::H22 => 0.25,
            ProofCase::H21Log => 1.0 / 16.0,
            ProofCase::H21InvLog => 43.0 / 576.0,
        }
    }

    /// `k·ζ(1 − ζ²)·Y(A(ζ), B(ζ), C(ζ))`, an upper bound for `|F|` at fixed `ζ₁ = ζ`.
    pub fn reduced_bound(self, zeta1: f64) -> Result<(f64, YBranch)> {
        let y = y_exact(&self.abc(zeta1)?);
        Ok((self.prefactor() * zeta1 * (1.0 - zeta1 * zeta1) * y.value, y.branch))
    }

    /// Threshold splitting the second and third `R` branches; `None` for `h22`.
    pub fn zeta_prime(self) -> Option<f64> {
        match self {
            ProofCase::H22 => None,
            ProofCase::H21Log => Some(ZETA_PRIME_LOG),
            ProofCase::H21InvLog => Some(ZETA_PRIME_INVLOG),
        }
    }

    pub fn scalars(self, zeta1: f64) -> Result<ProofScalars> {
        Ok(ProofScalars::from_abc(&self.abc(zeta1)?))
    }

    /// Simplified rational forms of `T₁ … T₆`; `None` for `h22`.
    pub fn closed_form_scalars(self, zeta1: f64) -> Result<Option<ProofScalars>> {
        check_open_unit(zeta1)?;
        let z = zeta1;
        let z2 = z * z;
        let z4 = z2 * z2;
        let t3 = (3.0 + 4.0 * z + z2).powi(2) / (4.0 * z2);
        Ok(match self {
            ProofCase::H22 => None,
            ProofCase::H21Log => Some(ProofScalars {
                t1: 3.0 / (2.0 * z) + 3.0 * z / 4.0 - 2.0,
                t2: -z2 * (18.0 - z2) / (12.0 * (3.0 + z2)),
                t3,
                t4: -7.0 * z2 * (9.0 - z2) / (48.0 * (3.0 + z2)),
                t5: -(12.0 + 20.0 * z2 + 3.0 * z4) / (64.0 * (1.0 - z2)),
                t6: -(36.0 - 108.0 * z2 - 47.0 * z4) / (192.0 * (1.0 - z2)),
            }),
            ProofCase::H21InvLog => Some(ProofScalars {
                t1: 3.0 / (2.0 * z) + 7.0 * z / 4.0 - 2.0,
                t2: -z2 * (153.0 + 8.0 * z2) / (12.0 * (3.0 + z2)),
                t3,
                t4: -43.0 * z2 * (9.0 - z2) / (48.0 * (3.0 + z2)),
                t5: -(180.0 + 396.0 * z2 - 103.0 * z4) / (192.0 * (1.0 - z2)),
                t6: -(60.0 - 212.0 * z2 - 149.0 * z4) / (64.0 * (1.0 - z2)),
            }),
        })
    }

    /// Envelope on `(0, ζ′]` (all of `(0, 1)` for `h22`), as a polynomial in `ζ`.
    pub fn first_envelope(self, zeta1: f64) -> f64 {
        let z2 = zeta1 * zeta1;
        let z4 = z2 * z2;
        match self {
            ProofCase::H22 => (36.0 - 12.0 * z2 - 19.0 * z4) / 144.0,
            ProofCase::H21Log => (36.0 - 12.0 * z2 - 31.0 * z4) / 576.0,
            ProofCase::H21InvLog => (36.0 + 36.0 * z2 - 115.0 * z4) / 576.0,
        }
    }

    /// `k·ζ(1 − ζ²)` times the branch formula used on `(0, ζ′]`, straight from `A, B, C`.
    pub fn first_envelope_from_abc(self, zeta1: f64) -> Result<f64> {
        let y = self.abc(zeta1)?;
        let branch = match self {
            ProofCase::H22 => YBranch::SameSignLarge,
            _ => YBranch::RSecond,
        };
        let value = branch.formula(&y).expect("finite on (0, 1)");
        Ok(self.prefactor() * zeta1 * (1.0 - zeta1 * zeta1) * value)
    }

    /// Envelope on `(ζ′, 1)` from the third `R` branch; `None` for `h22`.
    pub fn second_envelope(self, zeta1: f64) -> Option<f64> {
        let z2 = zeta1 * zeta1;
        let z4 = z2 * z2;
        match self {
            ProofCase::H22 => None,
            ProofCase::H21Log => Some(((6.0 + z2) / (21.0 + 7.0 * z2)).sqrt() * (36.0 - 24.0 * z2 - 5.0 * z4) / 288.0),
            ProofCase::H21InvLog => Some(
                ((51.0 - 8.0 * z2) / (3.0 + z2)).sqrt() * (36.0 - 24.0 * z2 + 31.0 * z4) / (288.0 * 43.0f64.sqrt()),
            ),
        }
    }

    /// The second envelope as usually quoted (differs in prefactor and sign for `h21-log`).
    pub fn quoted_second_envelope(self, zeta1: f64) -> Option<f64> {
        let z2 = zeta1 * zeta1;
        match self {
            ProofCase::H21Log => {
                Some(((6.0 + z2) / (21.0 + 7.0 * z2)).sqrt() * (5.0 * z2 * z2 + 24.0 * z2 - 36.0) / 168.0)
            }
            _ => self.second_envelope(zeta1),
        }
    }

    /// `k·ζ(1 − ζ²)·R₃(A, B, C)`, the unsimplified second envelope.
    pub fn second_envelope_from_abc(self, zeta1: f64) -> Result<Option<f64>> {
        if self == ProofCase::H22 {
            return Ok(None);
        }
        let y = self.abc(zeta1)?;
        let value = YBranch::RThird.formula(&y).expect("finite when AC < 0");
        Ok(Some(self.prefactor() * zeta1 * (1.0 - zeta1 * zeta1) * value))
    }
}

/// Outcome of checking the sign pattern of the proof scalars on a `ζ` grid.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ScalarAudit {
    pub case: ProofCase,
    pub points: usize,
    /// Human-readable description of each failed claim.
    pub failures: Vec<alloc::string::String>,
    /// Largest deviation between generic and closed-form scalars (relative).
    pub closed_form_residual: f64,
    /// `T₆(ζ′)` from the generic expression.
    pub t6_at_zeta_prime: Option<f64>,
    /// Branch selected by `y_exact` either side of `ζ′`.
    pub branches: Vec<(f64, YBranch)>,
}

impl ScalarAudit {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks on `points` interior grid points of `(0, 1)`:
/// `h22` — `AC ≥ 0` and `|B| ≥ 2(1 − |C|)`;
/// otherwise — `T₁ > 0`, `T₂ ≤ 0`, `T₃ > 0`, `T₄ < 0`, `T₅ < 0`, and `T₆ ≤ 0` exactly on `(0, ζ′]`.
pub fn audit_proof_scalars(case: ProofCase, points: usize) -> ScalarAudit {
    use alloc::format;
    let mut failures = Vec::new();
    let mut residual = 0.0f64;
    let mut branches = Vec::new();
    let zp = case.zeta_prime();
    for i in 1..=points {
        let z = i as f64 / (points + 1) as f64;
        let abc = case.abc(z).expect("interior point");
        let s = ProofScalars::from_abc(&abc);
        match case {
            ProofCase::H22 => {
                if abc.a * abc.c < 0.0 {
                    failures.push(format!("AC < 0 at zeta1 = {z}"));
                }
                if s.t1 < 0.0 {
                    failures.push(format!("|B| < 2(1-|C|) at zeta1 = {z}"));
                }
            }
            _ => {
                let zp = zp.expect("threshold defined");
                let claims = [
                    (s.t1 > 0.0, "T1 > 0"),
                    (s.t2 <= 0.0, "T2 <= 0"),
                    (s.t3 > 0.0, "T3 > 0"),
                    (s.t4 < 0.0, "T4 < 0"),
                    (s.t5 < 0.0, "T5 < 0"),
                    ((s.t6 <= 0.0) == (z <= zp), "T6 <= 0 iff zeta1 <= zeta'"),
                ];
                for (ok, what) in claims {
                    if !ok {
                        failures.push(format!("{what} fails at zeta1 = {z}"));
                    }
                }
                let closed = case.closed_form_scalars(z).expect("interior point").expect("defined");
                for (g, c) in s.as_array().iter().zip(closed.as_array()) {
                    residual = residual.max((g - c).abs() / 1.0f64.max(g.abs()));
                }
            }
        }
    }
    let t6_at_zeta_prime = zp.map(|zp| case.scalars(zp).expect("interior").t6);
    if let Some(zp) = zp {
        for z in [zp * 0.5, zp - 1e-6, zp + 1e-6, 0.5 * (zp + 1.0)] {
            branches.push((z, y_exact(&case.abc(z).expect("interior")).branch));
        }
    } else {
        branches.push((0.5, y_exact(&case.abc(0.5).expect("interior")).branch));
    }
    if points > 0 && residual > 1e-10 {
        failures.push(format!("closed-form scalars deviate by {residual:e}"));
    }
    ScalarAudit { case, points, failures, closed_form_residual: residual, t6_at_zeta_prime, branches }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn yin(a: f64, b: f64, c: f64) -> YInput {
        YInput::new(a, b, c).unwrap()
    }

    #[test]
    fn exact_examples() {
        let r = y_exact(&yin(1.0, 0.0, 0.0));
        assert_eq!(r, YResult { value: 2.0, branch: YBranch::SameSignSmall });
        let r = y_exact(&yin(0.0, 2.0, 0.0));
        assert_eq!(r.value, 2.0);
        let r = y_exact(&yin(1.0, 1.0, -1.0));
        assert!((r.value - 5.0f64.sqrt()).abs() < 1e-15);
        assert_eq!(r.branch, YBranch::RThird);
    }

    #[test]
    fn oracle_examples() {
        assert!((y_oracle(&yin(1.0, 0.0, 0.0), 500) - 2.0).abs() < 1e-4);
        assert!((y_oracle(&yin(0.0, 2.0, 0.0), 500) - 2.0).abs() < 1e-4);
        assert!((y_oracle(&yin(1.0, 1.0, -1.0), 500) - 5.0f64.sqrt()).abs() < 1e-4);
    }

    #[test]
    fn exact_dominates_oracle_with_small_gap() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..40 {
            let y = yin(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0));
            let gap = y_exact(&y).value - y_oracle(&y, 2000);
            assert!((-1e-12..=1e-3).contains(&gap), "{y:?}: gap {gap}");
        }
    }

    #[test]
    fn non_finite_inputs_are_rejected() {
        assert!(YInput::new(f64::NAN, 0.0, 0.0).is_err());
        assert!(YInput::new(0.0, f64::INFINITY, 0.0).is_err());
    }

    #[test]
    fn every_input_selects_a_branch() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut seen = alloc::collections::BTreeSet::new();
        for _ in 0..20000 {
            let y = yin(rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0));
            let r = y_exact(&y);
            assert!(r.value.is_finite() && r.value >= y.a.abs());
            seen.insert(r.branch.label());
        }
        assert_eq!(seen.len(), YBranch::ALL.len());
    }

    #[test]
    fn ties_take_the_larger_formula() {
        // |B| = 2(1 − |C|) with AC ≥ 0: both case-1 formulas equal |A| + 2 − |C|
        let r = y_exact(&yin(0.5, 1.0, 0.5));
        assert!((r.value - 2.0).abs() < 1e-15);
        // |C| = 1, B = 0: the small formula is undefined and the large one is used
        let r = y_exact(&yin(0.5, 0.0, 1.0));
        assert_eq!(r, YResult { value: 1.5, branch: YBranch::SameSignLarge });
    }

    #[test]
    fn continuity_across_seams() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let mut probes = 0;
        while probes < 300 {
            let mut p = || yin(rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0));
            let (from, to) = (p(), p());
            if from.a * from.c >= 0.0 || to.a * to.c >= 0.0 {
                continue;
            }
            if let Some(s) = seam_probe(&from, &to, 1e-8) {
                probes += 1;
                assert!(s.jump < 1e-6, "{s:?}");
            }
        }
    }

    #[test]
    fn zeta_primes_match_radicals() {
        let log = ((6.0 / 47.0) * (8.0 * 2.0f64.sqrt() - 9.0)).sqrt();
        let inv = ((2.0 / 149.0) * (2.0 * 1261.0f64.sqrt() - 53.0)).sqrt();
        assert!((ZETA_PRIME_LOG - log).abs() < 1e-15);
        assert!((ZETA_PRIME_INVLOG - inv).abs() < 1e-15);
        assert!((ZETA_PRIME_INVLOG - 0.491827).abs() < 1e-6);
        assert!(ProofCase::H21Log.scalars(ZETA_PRIME_LOG).unwrap().t6.abs() < 1e-13);
        assert!(ProofCase::H21InvLog.scalars(ZETA_PRIME_INVLOG).unwrap().t6.abs() < 1e-13);
    }

    #[test]
    fn proof_triples() {
        let y = abc_h22(0.5).unwrap();
        assert!((y.a + 5.0 / 288.0).abs() < 1e-15);
        assert!((y.b - 0.125).abs() < 1e-15);
        assert!((y.c + 13.0 / 8.0).abs() < 1e-15);
        assert!(y.a * y.c >= 0.0 && y.b.abs() >= 2.0 * (1.0 - y.c.abs()));
        assert!(abc_h22(1e-6).unwrap().a.abs() < 1e-15);
        for z in [0.0, 1.0, -0.5, 1.5] {
            assert!(abc_h22(z).is_err() && abc_h21_log(z).is_err() && abc_h21_invlog(z).is_err());
        }
        let t2 = ProofCase::H21Log.scalars(0.5).unwrap().t2;
        assert!((t2 + 0.25 * (18.0 - 0.25) / (12.0 * 3.25)).abs() < 1e-15);
        assert!(abc_h21_log(0.5).unwrap().a * abc_h21_log(0.5).unwrap().c < 0.0);
        assert!(abc_h21_invlog(0.5).unwrap().a * abc_h21_invlog(0.5).unwrap().c < 0.0);
    }

    #[test]
    fn scalar_audits_hold() {
        for case in ProofCase::ALL {
            let audit = audit_proof_scalars(case, 10_000);
            assert!(audit.passed(), "{:?}: {:?}", case, audit.failures);
        }
        let log = audit_proof_scalars(ProofCase::H21Log, 100);
        assert_eq!(log.branches[0].1, YBranch::RSecond);
        assert_eq!(log.branches[3].1, YBranch::RThird);
    }

    #[test]
    fn envelopes_match_branch_formulas() {
        for i in 1..200 {
            let z = i as f64 / 200.0;
            for case in ProofCase::ALL {
                let direct = case.first_envelope_from_abc(z).unwrap();
                assert!((direct - case.first_envelope(z)).abs() < 1e-14, "{case:?} at {z}");
                if let Some(e) = case.second_envelope(z) {
                    let direct = case.second_envelope_from_abc(z).unwrap().unwrap();
                    assert!((direct - e).abs() < 1e-14, "{case:?} at {z}");
                }
            }
        }
        let phi2 = ProofCase::H21Log.second_envelope(0.9).unwrap();
        assert!(phi2 <= 0.0516512);
        assert!(ProofCase::H21Log.quoted_second_envelope(0.9).unwrap() < 0.0);
        let peak = ProofCase::H21Log.second_envelope(ZETA_PRIME_LOG).unwrap();
        assert!((peak - 0.0516512).abs() < 1e-7);
    }

    #[test]
    fn reduced_bounds_stay_below_sharp_values() {
        for case in ProofCase::ALL {
            let mut sup = 0.0f64;
            for i in 1..2000 {
                sup = sup.max(case.reduced_bound(i as f64 / 2000.0).unwrap().0);
            }
            assert!(sup <= case.bound() + 1e-12, "{case:?}: {sup}");
            assert!(sup >= case.bound() - 1e-3, "{case:?}: {sup}");
        }
    }
}
