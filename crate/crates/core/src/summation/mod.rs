//! Values for divergent series: Euler (Abel) and Borel summation, summation
//! from the linearity and shift axioms, zeta regularization, and the greedy
//! rearrangement of the alternating harmonic series.

pub mod borel;
pub mod euler;
pub mod generic;
pub mod rearrange;
pub mod recurrence;
pub mod zeta;

use std::fmt;

use serde::Serialize;

use crate::numerics::scalar::Scalar;

pub use borel::{borel_sum_closed, borel_sum_numeric, ExpPolynomial};
pub use euler::{euler_alternating_power, euler_sum};
pub use generic::{generic_sum, generic_sum_periodic, geometric_sum};
pub use rearrange::{rearranged_partial_sum, riemann_rearrange};
pub use zeta::zeta_negative;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Euler,
    Borel,
    Generic,
    Zeta,
    Direct,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Euler => "euler",
            Method::Borel => "borel",
            Method::Generic => "generic",
            Method::Zeta => "zeta",
            Method::Direct => "direct",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SummationResult {
    pub value: Scalar,
    pub method: Method,
    /// Always non-empty for inexact values.
    pub diagnostics: Vec<String>,
}

impl SummationResult {
    pub fn exact(value: Scalar, method: Method, note: impl Into<String>) -> Self {
        Self {
            value,
            method,
            diagnostics: vec![note.into()],
        }
    }
}
