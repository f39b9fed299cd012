//! Truncated power series with complex coefficients.
//!
//! A [`PowerSeries`] of order `N` stores `c_0 ... c_N`. Binary operations
//! truncate to the smaller operand order. Every operation is a pure function
//! of its inputs.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Index, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::UNIT_EPS;

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PowerSeries {
    coeffs: Vec<Complex64>,
}

impl PowerSeries {
    /// Builds a series from `c_0 ... c_N`; an empty vector gives the zero
    /// series of order 0.
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Complex64::zero());
        }
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![Complex64::zero(); order + 1] }
    }

    pub fn constant(c: Complex64, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Complex64::new(1.0, 0.0), order)
    }

    /// `c z^k`, truncated to `order` (so it is zero when `k > order`).
    pub fn monomial(c: Complex64, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The identity series `z`.
    pub fn variable(order: usize) -> Self {
        Self::monomial(Complex64::new(1.0, 0.0), 1, order)
    }

    /// Mercator series of `log(1 + z)`.
    pub fn log1p_z(order: usize) -> Self {
        let mut s = Self::zero(order);
        for k in 1..=order {
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            s.coeffs[k] = Complex64::new(sign / k as f64, 0.0);
        }
        s
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    #[inline]
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Complex64> {
        self.coeffs
    }

    /// Coefficient of `z^k`, or `None` beyond the truncation order.
    pub fn coeff(&self, k: usize) -> Option<Complex64> {
        self.coeffs.get(k).copied()
    }

    /// Drops coefficients above `order`. Never extends the series.
    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        Self { coeffs: self.coeffs[..=n].to_vec() }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|&a| a * c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self { coeffs: (0..=n).map(|k| self.coeffs[k] + other.coeffs[k]).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self { coeffs: (0..=n).map(|k| self.coeffs[k] - other.coeffs[k]).collect() }
    }

    /// Cauchy product truncated to the common order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|k| (0..=k).fold(Complex64::zero(), |acc, i| acc + self.coeffs[i] * other.coeffs[k - i]))
            .collect();
        Self { coeffs }
    }

    /// Series quotient `self / divisor`; the divisor's constant term must be a unit.
    pub fn div(&self, divisor: &Self) -> Result<Self> {
        let b0 = divisor.coeffs[0];
        if b0.norm() <= UNIT_EPS {
            return Err(Error::DivisionByNonUnit { modulus: b0.norm() });
        }
        let n = self.order().min(divisor.order());
        let mut q = vec![Complex64::zero(); n + 1];
        for k in 0..=n {
            let mut acc = self.coeffs[k];
            for i in 1..=k {
                acc -= divisor.coeffs[i] * q[k - i];
            }
            q[k] = acc / b0;
        }
        Ok(Self { coeffs: q })
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one(self.order()).div(self)
    }

    /// Formal exponential from the recurrence `y' = a' y`.
    pub fn exp(&self) -> Self {
        let n = self.order();
        let mut e = vec![Complex64::zero(); n + 1];
        e[0] = self.coeffs[0].exp();
        for m in 1..=n {
            let mut acc = Complex64::zero();
            for k in 1..=m {
                acc += self.coeffs[k] * e[m - k] * k as f64;
            }
            e[m] = acc / m as f64;
        }
        Self { coeffs: e }
    }

    /// Formal principal logarithm from the recurrence `y' = a'/a`.
    pub fn log(&self) -> Result<Self> {
        let a0 = self.coeffs[0];
        if a0.re <= 0.0 {
            return Err(Error::BranchViolation { re: a0.re });
        }
        let n = self.order();
        let mut l = vec![Complex64::zero(); n + 1];
        l[0] = a0.ln();
        for m in 1..=n {
            let mut acc = self.coeffs[m] * m as f64;
            for k in 1..m {
                acc -= l[k] * self.coeffs[m - k] * k as f64;
            }
            l[m] = acc / (a0 * m as f64);
        }
        Ok(Self { coeffs: l })
    }

    /// Term-wise derivative. The top coefficient is lost, so the order drops by one.
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self { coeffs: (1..=self.order()).map(|k| self.coeffs[k] * k as f64).collect() }
    }

    /// Antiderivative with zero constant term; exact to one order higher.
    pub fn integrate(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Complex64::zero());
        coeffs.extend(self.coeffs.iter().enumerate().map(|(k, &c)| c / (k + 1) as f64));
        Self { coeffs }
    }

    /// `z * self`, exact to one order higher.
    pub fn mul_z(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Complex64::zero());
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }

    /// `self / z`; the constant term is discarded (callers ensure it is zero).
    pub fn div_z(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self { coeffs: self.coeffs[1..].to_vec() }
    }

    /// `outer(inner(z))` by Horner's rule. `inner` must have no constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        let c0 = inner.coeffs[0];
        if c0 != Complex64::zero() {
            return Err(Error::NonvanishingInner { modulus: c0.norm() });
        }
        let n = self.order().min(inner.order());
        let inner = inner.truncate(n);
        let mut acc = Self::constant(self.coeffs[n], n);
        for k in (0..n).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] += self.coeffs[k];
        }
        Ok(acc)
    }

    /// Compositional inverse by Lagrange inversion:
    /// `g_n = (1/n) [z^(n-1)] (z/f)^n`.
    pub fn revert(&self) -> Result<Self> {
        let f0 = self.coeffs[0];
        let f1 = self.coeffs.get(1).copied().unwrap_or_else(Complex64::zero);
        if f0 != Complex64::zero() || f1.norm() <= UNIT_EPS {
            return Err(Error::NonUnitDerivative { f0: f0.norm(), f1: f1.norm() });
        }
        let n = self.order();
        // h = z / f, known to order n - 1
        let h = self.div_z().recip()?;
        let mut g = vec![Complex64::zero(); n + 1];
        let mut power = Self::one(n - 1);
        for m in 1..=n {
            power = power.mul(&h);
            g[m] = power.coeffs[m - 1] / m as f64;
        }
        Ok(Self { coeffs: g })
    }

    /// Horner evaluation of the stored polynomial part at `z`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::zero(), |acc, &c| acc * z + c)
    }

    /// Largest coefficient-wise modulus difference over the common order.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let n = self.order().min(other.order());
        (0..=n).map(|k| (self.coeffs[k] - other.coeffs[k]).norm()).fold(0.0, f64::max)
    }
}

impl Index<usize> for PowerSeries {
    type Output = Complex64;

    fn index(&self, k: usize) -> &Complex64 {
        &self.coeffs[k]
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: Self) -> PowerSeries {
        PowerSeries::add(self, rhs)
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: Self) -> PowerSeries {
        PowerSeries::sub(self, rhs)
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: Self) -> PowerSeries {
        PowerSeries::mul(self, rhs)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}
