//! Sine series on `[0, π]`, their endpoint asymptotics and Gibbs-aware
//! acceleration, and the heat equation with time-dependent boundary values.
//!
//! Quadrature here runs in `f64`; closed forms are used for constants,
//! polynomials and pure sines.

pub mod handle;
pub mod heat;
pub mod sine;

pub use handle::FunctionHandle;
pub use heat::{heat_solve, BoundaryLayer, HeatProblem, HeatSolution};
pub use sine::{endpoint_recovery, gibbs_accelerate, gibbs_overshoot, sine_coefficients, BoundaryTerm, SineSeries};
