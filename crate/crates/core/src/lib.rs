//! Numerics for the stimulated Raman scattering quarter-plane problem.
//!
//! The library solves the algebraic/Abel-integral system governing the
//! branch points of the genus-1 phase function, certifies its unique
//! solvability through a polynomial positivity proof, evaluates the
//! plane-wave / modulated-elliptic / dispersive asymptotic fields, and
//! cross-validates them against direct integration of the PDE system.
//!
//! Module map:
//! - [`core_model`]: physical constants, spectral functions, contours, phases
//! - [`whitham`]: genus-0 cubic, genus-1 branch-point solver, positivity certificate
//! - [`gfun`]: phase differentials, Abel condition, band tracing, sign maps
//! - [`elliptic`]: genus-1 model data (periods, theta function, phase shifts)
//! - [`asymptotics`]: leading-order fields in the three regions
//! - [`srs_pde`]: direct integrator for cross-validation

pub mod asymptotics;
pub mod core_model;
pub mod curve;
pub mod elliptic;
pub mod error;
pub mod gfun;
pub mod interval;
pub mod path;
pub mod quad;
pub mod roots;
pub mod srs_pde;
pub mod whitham;

pub use error::{Error, Result};

/// Complex double shorthand used throughout.
pub type C64 = num_complex::Complex<f64>;

/// i as a `C64` constant.
pub const I: C64 = C64::new(0.0, 1.0);
