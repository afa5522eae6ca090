//! Moments, continued fractions, Padé approximants and the diagnostics that
//! tie them together.

pub mod approximant;
pub mod cexp;
pub mod diagnostics;
pub mod moments;
pub mod staircase;

pub use approximant::{pade_approximant, pade_from_coeffs, PadeRational};
pub use cexp::{continued_exponential, continued_exponential_match};
pub use diagnostics::{carleman_check, herglotz_probe, stieltjes_hankel_check};
pub use moments::{contfrac_to_moments, moments_to_contfrac, ContFracCoeffs, MomentSequence, OrthogonalPolySet};
pub use staircase::{staircase_evaluate, StaircaseEntry};
