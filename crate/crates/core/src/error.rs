//! Error type shared by all solver modules.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Input outside the admissible parameter domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation requested at or too close to a pole.
    #[error("pole at {0}")]
    Pole(String),

    /// Evaluation requested on a branch cut without a side flag.
    #[error("point on branch cut: {0}")]
    OnCut(String),

    /// Evaluation too close to a branch cut for reliable values.
    #[error("cut proximity: {0}")]
    CutProximity(String),

    /// The slow variable sits inside the guard band around a region border.
    #[error("xi = {xi} is within the guard band of the {which} border")]
    Border { xi: f64, which: &'static str },

    /// A solver was asked to run outside its region of validity.
    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    /// Adaptive quadrature could not reach the requested tolerance.
    #[error("quadrature tolerance not met: requested {requested}, achieved {achieved}")]
    Quadrature { requested: f64, achieved: f64 },

    /// Bracketed root search found no sign change.
    #[error("no sign change in bracket [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    /// Iteration hit its budget before reaching tolerance.
    #[error("tolerance not met: {0}")]
    ToleranceNotMet(String),

    /// A quantity that must be real came out with a large imaginary part.
    #[error("reality violation: {what} has |Im| = {imag:e}")]
    RealityViolation { what: &'static str, imag: f64 },

    /// Level-curve tracer stalled or missed its endpoint.
    #[error("band tracing failed: {0}")]
    Tracing(String),

    /// Theta-function denominator too close to a lattice zero.
    #[error("theta function degenerate: {0}")]
    ThetaDegenerate(String),

    /// The direct integrator lost the conservation law.
    #[error("conservation breach: residual {residual:e} at t = {t}")]
    ConservationBreach { residual: f64, t: f64 },

    /// Requested run exceeds the configured work budget.
    #[error("budget exceeded: {0}")]
    Budget(String),
}

impl Error {
    /// True for errors caused by bad user input rather than numerical failure.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Domain(_) | Error::Budget(_))
    }
}
