//! Second-order Hankel and Toeplitz functionals over initial, logarithmic and
//! inverse-logarithmic coefficients, and generic `q × q` determinants.

use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::balloon::CoefficientSet;
use crate::error::{Error, Result};

/// Every functional the library evaluates.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "snake_case"))]
pub enum FunctionalId {
    /// `a₃ − μa₂²`.
    FeketeSzego {
        mu: Complex64,
    },
    /// `a₃ − a₂²`.
    H21,
    /// `a₂a₄ − a₃²`.
    H22,
    /// `γ₁γ₃ − γ₂²`.
    H21Log,
    /// `Γ₁Γ₃ − Γ₂²`.
    H21InvLog,
    /// `1 − a₂²`.
    T21,
    /// `a₂² − a₃²`.
    T22,
    /// `a₃² − a₄²`.
    T23,
    /// `γ₁² − γ₂²`.
    T21Log,
    /// `Γ₁² − Γ₂²`.
    T21InvLog,
    Hankel {
        stream: Stream,
        q: usize,
        n: usize,
    },
    Toeplitz {
        stream: Stream,
        q: usize,
        n: usize,
    },
}

/// Coefficient stream a generic determinant is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Stream {
    Initial,
    Log,
    InvLog,
}

impl FunctionalId {
    /// The ten named functionals, with Fekete–Szegő at `μ = 1`.
    pub const NAMED: [FunctionalId; 10] = [
        FunctionalId::H21,
        FunctionalId::H22,
        FunctionalId::H21Log,
        FunctionalId::H21InvLog,
        FunctionalId::T21,
        FunctionalId::T22,
        FunctionalId::T23,
        FunctionalId::T21Log,
        FunctionalId::T21InvLog,
        FunctionalId::FeketeSzego { mu: Complex64 { re: 1.0, im: 0.0 } },
    ];

    pub fn fekete_szego(mu: f64) -> Self {
        FunctionalId::FeketeSzego { mu: Complex64::new(mu, 0.0) }
    }

    pub fn evaluate(&self, c: &CoefficientSet) -> Result<Complex64> {
        Ok(match *self {
            FunctionalId::FeketeSzego { mu } => fekete_szego(c, mu),
            FunctionalId::H21 => hankel21(c),
            FunctionalId::H22 => hankel22(c),
            FunctionalId::H21Log => hankel21_log(c),
            FunctionalId::H21InvLog => hankel21_invlog(c),
            FunctionalId::T21 => toeplitz_initial(c, 1)?,
            FunctionalId::T22 => toeplitz_initial(c, 2)?,
            FunctionalId::T23 => toeplitz_initial(c, 3)?,
            FunctionalId::T21Log => toeplitz_log(c),
            FunctionalId::T21InvLog => toeplitz_invlog(c),
            FunctionalId::Hankel { stream, q, n } => generic_hankel(&stream_of(c, stream), q, n)?,
            FunctionalId::Toeplitz { stream, q, n } => generic_toeplitz(&stream_of(c, stream), q, n)?,
        })
    }

    /// Highest initial coefficient index the functional reads.
    pub fn max_coefficient(&self) -> usize {
        match *self {
            FunctionalId::FeketeSzego { .. } | FunctionalId::H21 | FunctionalId::T21 | FunctionalId::T22 => 3,
            FunctionalId::T21Log | FunctionalId::T21InvLog => 3,
            FunctionalId::H22 | FunctionalId::H21Log | FunctionalId::H21InvLog | FunctionalId::T23 => 4,
            FunctionalId::Hankel { stream, q, n } => stream_index_to_a(stream, n + 2 * (q.max(1) - 1)),
            FunctionalId::Toeplitz { stream, q, n } => stream_index_to_a(stream, n + q.max(1) - 1),
        }
    }

    /// Whether `|F|` is unchanged under `a_k ↦ e^{i(k−1)θ} a_k`.
    pub fn is_rotation_invariant(&self) -> bool {
        matches!(
            self,
            FunctionalId::FeketeSzego { .. }
                | FunctionalId::H21
                | FunctionalId::H22
                | FunctionalId::H21Log
                | FunctionalId::H21InvLog
                | FunctionalId::Hankel { .. }
        )
    }

    /// Short machine name, e.g. `h22`, `fs(0.5)`.
    pub fn slug(&self) -> alloc::string::String {
        use alloc::format;
        match *self {
            FunctionalId::FeketeSzego { mu } if mu.im == 0.0 => format!("fs({})", mu.re),
            FunctionalId::FeketeSzego { mu } => format!("fs({},{})", mu.re, mu.im),
            FunctionalId::H21 => "h21".into(),
            FunctionalId::H22 => "h22".into(),
            FunctionalId::H21Log => "h21-log".into(),
            FunctionalId::H21InvLog => "h21-invlog".into(),
            FunctionalId::T21 => "t21".into(),
            FunctionalId::T22 => "t22".into(),
            FunctionalId::T23 => "t23".into(),
            FunctionalId::T21Log => "t21-log".into(),
            FunctionalId::T21InvLog => "t21-invlog".into(),
            FunctionalId::Hankel { stream, q, n } => format!("hankel-{}({},{})", stream.slug(), q, n),
            FunctionalId::Toeplitz { stream, q, n } => format!("toeplitz-{}({},{})", stream.slug(), q, n),
        }
    }

    /// Inverse of [`FunctionalId::slug`].
    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        let named = match s {
            "h21" => Some(FunctionalId::H21),
            "h22" => Some(FunctionalId::H22),
            "h21-log" => Some(FunctionalId::H21Log),
            "h21-invlog" => Some(FunctionalId::H21InvLog),
            "t21" => Some(FunctionalId::T21),
            "t22" => Some(FunctionalId::T22),
            "t23" => Some(FunctionalId::T23),
            "t21-log" => Some(FunctionalId::T21Log),
            "t21-invlog" => Some(FunctionalId::T21InvLog),
            _ => None,
        };
        if named.is_some() {
            return named;
        }
        let (head, args) = s.strip_suffix(')')?.split_once('(')?;
        let nums: Vec<&str> = args.split(',').map(str::trim).collect();
        if head == "fs" {
            let re = nums.first()?.parse().ok()?;
            let im = match nums.len() {
                1 => 0.0,
                2 => nums[1].parse().ok()?,
                _ => return None,
            };
            return Some(FunctionalId::FeketeSzego { mu: Complex64::new(re, im) });
        }
        let (kind, stream) = head.split_once('-')?;
        let stream = Stream::parse(stream)?;
        if nums.len() != 2 {
            return None;
        }
        let q = nums[0].parse().ok()?;
        let n = nums[1].parse().ok()?;
        match kind {
            "hankel" => Some(FunctionalId::Hankel { stream, q, n }),
            "toeplitz" => Some(FunctionalId::Toeplitz { stream, q, n }),
            _ => None,
        }
    }
}

impl fmt::Display for FunctionalId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.slug())
    }
}

impl Stream {
    pub fn slug(self) -> &'static str {
        match self {
            Stream::Initial => "a",
            Stream::Log => "gamma",
            Stream::InvLog => "big-gamma",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "a" => Some(Stream::Initial),
            "gamma" => Some(Stream::Log),
            "big-gamma" => Some(Stream::InvLog),
            _ => None,
        }
    }
}

fn stream_index_to_a(stream: Stream, k: usize) -> usize {
    match stream {
        Stream::Initial => k,
        Stream::Log | Stream::InvLog => k + 1,
    }
}

/// The stream indexed by subscript: `seq[k]` is the `k`-th coefficient.
pub fn stream_of(c: &CoefficientSet, stream: Stream) -> Vec<Complex64> {
    match stream {
        Stream::Initial => c.a_stream(),
        Stream::Log => c.gamma_stream().to_vec(),
        Stream::InvLog => c.big_gamma_stream().to_vec(),
    }
}

#[inline]
pub fn fekete_szego(c: &CoefficientSet, mu: Complex64) -> Complex64 {
    c.a3 - mu * c.a2 * c.a2
}

#[inline]
pub fn hankel21(c: &CoefficientSet) -> Complex64 {
    c.a3 - c.a2 * c.a2
}

#[inline]
pub fn hankel22(c: &CoefficientSet) -> Complex64 {
    c.a2 * c.a4 - c.a3 * c.a3
}

/// `¼(a₂a₄ − a₃² + a₂⁴/12)`.
#[inline]
pub fn hankel21_log(c: &CoefficientSet) -> Complex64 {
    let a2sq = c.a2 * c.a2;
    (c.a2 * c.a4 - c.a3 * c.a3 + a2sq * a2sq / 12.0) * 0.25
}

/// `(13a₂⁴ − 12a₂²a₃ − 12a₃² + 12a₂a₄)/48`.
#[inline]
pub fn hankel21_invlog(c: &CoefficientSet) -> Complex64 {
    let a2sq = c.a2 * c.a2;
    (a2sq * a2sq * 13.0 - a2sq * c.a3 * 12.0 - c.a3 * c.a3 * 12.0 + c.a2 * c.a4 * 12.0) / 48.0
}

/// `T₂,₁ = 1 − a₂²`, `T₂,₂ = a₂² − a₃²`, `T₂,₃ = a₃² − a₄²`.
#[inline]
pub fn toeplitz_initial(c: &CoefficientSet, n: usize) -> Result<Complex64> {
    match n {
        1 => Ok(Complex64::one() - c.a2 * c.a2),
        2 => Ok(c.a2 * c.a2 - c.a3 * c.a3),
        3 => Ok(c.a3 * c.a3 - c.a4 * c.a4),
        _ => Err(Error::DomainError { what: "toeplitz index must be 1, 2 or 3", value: n as f64 }),
    }
}

/// `(4a₂² − a₂⁴ − 4a₃² + 4a₂²a₃)/16`.
#[inline]
pub fn toeplitz_log(c: &CoefficientSet) -> Complex64 {
    let a2sq = c.a2 * c.a2;
    (a2sq * 4.0 - a2sq * a2sq - c.a3 * c.a3 * 4.0 + a2sq * c.a3 * 4.0) / 16.0
}

/// `−(9a₂⁴ − 4a₂² + 4a₃² − 12a₂²a₃)/16`.
#[inline]
pub fn toeplitz_invlog(c: &CoefficientSet) -> Complex64 {
    let a2sq = c.a2 * c.a2;
    -(a2sq * a2sq * 9.0 - a2sq * 4.0 + c.a3 * c.a3 * 4.0 - a2sq * c.a3 * 12.0) / 16.0
}

fn check_stream(seq: &[Complex64], q: usize, n: usize, needed: usize) -> Result<()> {
    if q == 0 {
        return Err(Error::InvalidConfig("determinant size q must be at least 1"));
    }
    if seq.len() <= needed {
        return Err(Error::InsufficientCoefficients { q, n, needed, len: seq.len() });
    }
    Ok(())
}

/// `det [seq[n+i+j]]_{i,j<q}`.
pub fn generic_hankel(seq: &[Complex64], q: usize, n: usize) -> Result<Complex64> {
    check_stream(seq, q, n, n + 2 * q.saturating_sub(1))?;
    Ok(determinant(q, |i, j| seq[n + i + j]))
}

/// `det [seq[n+|i−j|]]_{i,j<q}`.
pub fn generic_toeplitz(seq: &[Complex64], q: usize, n: usize) -> Result<Complex64> {
    check_stream(seq, q, n, n + q.saturating_sub(1))?;
    Ok(determinant(q, |i, j| seq[n + i.abs_diff(j)]))
}

fn determinant(q: usize, entry: impl Fn(usize, usize) -> Complex64) -> Complex64 {
    let m = |i, j| entry(i, j);
    match q {
        1 => m(0, 0),
        2 => m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0),
        3 => {
            m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
                + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
        }
        _ => {
            let mut a: Vec<Complex64> = (0..q * q).map(|k| m(k / q, k % q)).collect();
            lu_determinant(&mut a, q)
        }
    }
}

fn lu_determinant(a: &mut [Complex64], q: usize) -> Complex64 {
    let mut det = Complex64::one();
    for col in 0..q {
        let pivot =
            (col..q).max_by(|&x, &y| a[x * q + col].norm().total_cmp(&a[y * q + col].norm())).expect("non-empty range");
        if a[pivot * q + col].is_zero() {
            return Complex64::zero();
        }
        if pivot != col {
            for k in 0..q {
                a.swap(pivot * q + k, col * q + k);
            }
            det = -det;
        }
        let p = a[col * q + col];
        det *= p;
        for row in col + 1..q {
            let factor = a[row * q + col] / p;
            for k in col..q {
                let v = a[col * q + k];
                a[row * q + k] -= factor * v;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balloon::{full_coefficient_set, Extremal};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() <= 1e-12
    }

    fn random_set(rng: &mut ChaCha8Rng) -> CoefficientSet {
        let mut z = || c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        full_coefficient_set(z(), z(), z(), Some(z()))
    }

    #[test]
    fn fekete_szego_examples() {
        let f2 = Extremal::F2.coefficient_set();
        assert!((fekete_szego(&f2, c(1.0, 0.0)).norm() - 0.5).abs() < 1e-12);
        let id = CoefficientSet::identity();
        assert_eq!(fekete_szego(&id, c(0.3, -2.0)), c(0.0, 0.0));
        let f1 = Extremal::F1.coefficient_set();
        assert!(close(fekete_szego(&f1, c(0.0, 0.0)), c(0.75, 0.0)));
    }

    #[test]
    fn hankel_examples() {
        let (f1, f2) = (Extremal::F1.coefficient_set(), Extremal::F2.coefficient_set());
        let id = CoefficientSet::identity();
        assert!(close(hankel22(&f2), c(-0.25, 0.0)));
        assert_eq!(hankel22(&id), c(0.0, 0.0));
        assert!(close(hankel22(&f1), c(-5.0 / 144.0, 0.0)));

        assert!(close(hankel21_log(&f2), c(-1.0 / 16.0, 0.0)));
        assert_eq!(hankel21_log(&id), c(0.0, 0.0));
        assert!(close(hankel21_log(&f1), c(7.0 / 576.0, 0.0)));

        assert!(close(hankel21_invlog(&f1), c(43.0 / 576.0, 0.0)));
        assert_eq!(hankel21_invlog(&id), c(0.0, 0.0));
        assert!(close(hankel21_invlog(&f2), c(-1.0 / 16.0, 0.0)));
    }

    #[test]
    fn toeplitz_examples() {
        let f3 = Extremal::F3.coefficient_set();
        let id = CoefficientSet::identity();
        assert!(close(toeplitz_initial(&f3, 1).unwrap(), c(2.0, 0.0)));
        assert!(close(toeplitz_initial(&f3, 2).unwrap(), c(-25.0 / 16.0, 0.0)));
        assert!(close(toeplitz_initial(&f3, 3).unwrap(), c(545.0 / 648.0, 0.0)));
        assert!(toeplitz_initial(&f3, 4).is_err());

        assert!(close(toeplitz_log(&f3), c(-17.0 / 64.0, 0.0)));
        assert!(close(toeplitz_invlog(&f3), c(-25.0 / 64.0, 0.0)));
        assert_eq!(toeplitz_log(&id), c(0.0, 0.0));
        assert_eq!(toeplitz_invlog(&id), c(0.0, 0.0));
    }

    #[test]
    fn generic_determinant_examples() {
        let f2 = Extremal::F2.coefficient_set();
        let a = f2.a_stream();
        assert!(close(generic_hankel(&a, 2, 1).unwrap(), fekete_szego(&f2, c(1.0, 0.0))));
        for n in 1..a.len() {
            assert_eq!(generic_hankel(&a, 1, n).unwrap(), a[n]);
            assert_eq!(generic_toeplitz(&a, 1, n).unwrap(), a[n]);
        }
        let f1 = Extremal::F1.coefficient_set();
        assert!(close(generic_hankel(&f1.gamma_stream(), 2, 1).unwrap(), c(7.0 / 576.0, 0.0)));

        assert!(matches!(
            generic_hankel(&f1.gamma_stream(), 2, 2),
            Err(Error::InsufficientCoefficients { q: 2, n: 2, needed: 4, len: 4 })
        ));
        assert!(generic_toeplitz(&a, 0, 1).is_err());
    }

    #[test]
    fn lu_matches_cofactor_expansion() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let seq: Vec<Complex64> =
                (0..8).map(|_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect();
            let direct = determinant(3, |i, j| seq[1 + i + j]);
            let mut m: Vec<Complex64> = (0..9).map(|k| seq[1 + k / 3 + k % 3]).collect();
            assert!((direct - lu_determinant(&mut m, 3)).norm() < 1e-12);
        }
        // 4×4 Hankel of 1,2,3,... is singular; Toeplitz of 1,0,0,... is the identity
        let ramp: Vec<Complex64> = (0..10).map(|k| c(k as f64, 0.0)).collect();
        assert!(generic_hankel(&ramp, 4, 1).unwrap().norm() < 1e-12);
        let mut unit = alloc::vec![c(0.0, 0.0); 6];
        unit[1] = c(1.0, 0.0);
        assert_eq!(generic_toeplitz(&unit, 5, 1).unwrap(), c(1.0, 0.0));
    }

    #[test]
    fn generic_agrees_with_specialized() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let s = random_set(&mut rng);
            let (a, g, big) = (s.a_stream(), s.gamma_stream(), s.big_gamma_stream());
            assert!(close(generic_hankel(&a, 2, 1).unwrap(), hankel21(&s)));
            assert!(close(generic_hankel(&a, 2, 2).unwrap(), hankel22(&s)));
            assert!(close(generic_hankel(&g, 2, 1).unwrap(), hankel21_log(&s)));
            assert!(close(generic_hankel(&big, 2, 1).unwrap(), hankel21_invlog(&s)));
            for n in 1..=3 {
                assert!(close(generic_toeplitz(&a, 2, n).unwrap(), toeplitz_initial(&s, n).unwrap()));
            }
            assert!(close(generic_toeplitz(&g, 2, 1).unwrap(), toeplitz_log(&s)));
            assert!(close(generic_toeplitz(&big, 2, 1).unwrap(), toeplitz_invlog(&s)));
        }
    }

    #[test]
    fn rotation_covariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let s = random_set(&mut rng);
            let theta = rng.random_range(-3.0..3.0);
            let r = s.rotated(theta);
            let phase = Complex64::from_polar(1.0, 4.0 * theta);
            for f in [hankel22, hankel21_log, hankel21_invlog] {
                assert!((f(&r) - f(&s) * phase).norm() < 1e-12);
                assert!((f(&r).norm() - f(&s).norm()).abs() < 1e-12);
            }
            for id in FunctionalId::NAMED.iter().filter(|id| id.is_rotation_invariant()) {
                let (x, y) = (id.evaluate(&r).unwrap(), id.evaluate(&s).unwrap());
                assert!((x.norm() - y.norm()).abs() < 1e-12, "{id}");
            }
        }
    }

    #[test]
    fn slugs_round_trip() {
        let mut ids = FunctionalId::NAMED.to_vec();
        ids.push(FunctionalId::FeketeSzego { mu: c(0.25, -1.5) });
        ids.push(FunctionalId::Hankel { stream: Stream::Log, q: 2, n: 1 });
        ids.push(FunctionalId::Toeplitz { stream: Stream::InvLog, q: 3, n: 1 });
        ids.push(FunctionalId::Hankel { stream: Stream::Initial, q: 3, n: 1 });
        for id in ids {
            assert_eq!(FunctionalId::parse(&id.slug()), Some(id), "{id}");
        }
        assert_eq!(FunctionalId::parse("fs(1)"), Some(FunctionalId::fekete_szego(1.0)));
        assert_eq!(FunctionalId::parse("nope"), None);
        assert_eq!(FunctionalId::parse("hankel-x(2,1)"), None);
    }

    #[test]
    fn dispatch_matches_direct_evaluators() {
        let f3 = Extremal::F3.coefficient_set();
        assert_eq!(FunctionalId::T22.evaluate(&f3).unwrap(), toeplitz_initial(&f3, 2).unwrap());
        assert_eq!(FunctionalId::H21Log.evaluate(&f3).unwrap(), hankel21_log(&f3));
        let id = FunctionalId::Hankel { stream: Stream::InvLog, q: 2, n: 1 };
        assert!(close(id.evaluate(&f3).unwrap(), hankel21_invlog(&f3)));
        assert_eq!(FunctionalId::H22.max_coefficient(), 4);
        assert_eq!(id.max_coefficient(), 4);
    }
}
