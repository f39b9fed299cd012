//! Numerical machinery for the starlike class associated with the
//! balloon-shaped domain `B(z) = 1/(1 - log(1+z))`.
//!
//! The crate is `no_std` (it needs `alloc`). It provides truncated complex
//! power series, the Carathéodory and Schwarz-function parameterizations,
//! the class-specific coefficient maps and boundary geometry, every
//! second-order Hankel/Toeplitz functional on initial, logarithmic and
//! inverse-logarithmic coefficients, the piecewise maximum `Y(A, B, C)`
//! with a grid oracle, and the sweeps that certify each sharp bound.
//!
//! IO, file formats and the command line live in the `balloon-cli` crate.

#![no_std]
#![forbid(unsafe_code)]
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

extern crate alloc;

pub mod balloon;
pub mod caratheodory;
pub mod choi_y;
pub mod error;
pub mod functionals;
pub mod series;
pub mod verifier;

pub use num_complex::Complex64;

pub use crate::balloon::{BalloonKernel, BoundaryPoint, ClassMember, CoefficientSet, Extremal, Region};
pub use crate::caratheodory::{CaratheodoryPrefix, SchwarzFunction, SchwarzParams, SchwarzPrefix};
pub use crate::choi_y::{YBranch, YInput, YResult};
pub use crate::error::{Error, Result};
pub use crate::functionals::FunctionalId;
pub use crate::series::PowerSeries;
pub use crate::verifier::{BoundCheck, ExactBound, SweepConfig, Target, Verdict};

/// Unit-constant-term / unit-derivative threshold for series preconditions.
pub const UNIT_EPS: f64 = 1e-9;

/// Slack allowed on `|ζ| ≤ 1` when validating disk parameters.
pub const DISK_TOL: f64 = 1e-12;
