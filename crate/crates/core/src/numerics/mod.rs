//! Shared numeric plumbing: the scalar tower, coefficient sequences,
//! quadrature, special numbers, small exact linear algebra and polynomials.

pub mod linalg;
pub mod poly;
pub mod quadrature;
pub mod scalar;
pub mod sequence;
pub mod series_json;
pub mod special;

pub use scalar::{Scalar, DEFAULT_DIGITS};
