//! Convergence acceleration, divergent-series summation, Padé approximants,
//! continued fractions and Fourier-based PDE tools, with the physics case
//! studies that exercise them.

pub mod accel;
pub mod catalog;
#[cfg(feature = "cli")]
pub mod cli;
pub mod error;
pub mod fourier;
pub mod numerics;
pub mod pade;
pub mod physics;
pub mod summation;

pub use error::{Error, Result};
pub use numerics::scalar::Scalar;
pub use numerics::sequence::{CoefficientSequence, PartialSums, SignConvention};
