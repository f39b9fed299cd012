use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by a series whose constant term {modulus:e} is not a unit")]
    DivisionByNonUnit { modulus: f64 },

    #[error("logarithm requires Re(a0) > 0, got {re}")]
    BranchViolation { re: f64 },

    #[error("composition requires an inner series without constant term (|c0| = {modulus:e})")]
    NonvanishingInner { modulus: f64 },

    #[error("reversion requires f0 = 0 and |f1| > eps (|f0| = {f0:e}, |f1| = {f1:e})")]
    NonUnitDerivative { f0: f64, f1: f64 },

    #[error("parameter zeta{index} has modulus {modulus} > 1")]
    ParamOutOfDisk { index: usize, modulus: f64 },

    #[error("Schwarz prefix violates coefficient inequality {which} by {excess:e}")]
    SchwarzViolation { which: usize, excess: f64 },

    #[error("truncation order {order} too small, need at least {needed}")]
    OrderTooSmall { order: usize, needed: usize },

    #[error("series must start with constant term 1")]
    NotNormalized,

    #[error("the origin is excluded from the domain")]
    OriginExcluded,

    #[error("{what} is outside its domain: {value}")]
    DomainError { what: &'static str, value: f64 },

    #[error("determinant of order {q} at index {n} needs coefficient {needed}, stream has {len}")]
    InsufficientCoefficients { q: usize, n: usize, needed: usize, len: usize },

    #[error("invalid sweep configuration: {0}")]
    InvalidConfig(&'static str),
}
