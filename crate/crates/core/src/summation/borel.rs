//! Borel summation `B = ∫₀^∞ g(t) e^{-t} dt` with `g(t) = Σ a_n t^n / n!`.

use num_complex::Complex64;

use super::recurrence::detect_rational_gf;
use super::{Method, SummationResult};
use crate::error::{Error, Result};
use crate::numerics::poly;
use crate::numerics::quadrature::{semi_infinite, tolerance_for};
use crate::numerics::scalar::{factorial, Scalar};
use crate::numerics::sequence::CoefficientSequence;
use crate::pade::{pade_from_coeffs, PadeRational};

/// Largest diagonal Padé order tried when continuing `g`.
pub const MAX_PADE_ORDER: usize = 20;

/// `q(t)·e^{-t}` stored as the coefficients of `q`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpPolynomial {
    pub coeffs: Vec<Scalar>,
}

impl ExpPolynomial {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        Self {
            coeffs: poly::trim(coeffs),
        }
    }

    /// `t e^{-t}`.
    pub fn t_exp() -> Self {
        Self::new(vec![Scalar::zero(), Scalar::one()])
    }

    /// `d/dt (q e^{-t}) = (q' - q) e^{-t}`.
    pub fn d_dt(&self) -> Self {
        let minus_q: Vec<Scalar> = self.coeffs.iter().map(|c| -c.clone()).collect();
        Self::new(poly::add(&poly::derivative(&self.coeffs), &minus_q))
    }

    /// `t·d/dt (q e^{-t})`.
    pub fn t_d_dt(&self) -> Self {
        self.d_dt().times_t()
    }

    pub fn times_t(&self) -> Self {
        let mut coeffs = vec![Scalar::zero()];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    /// `∫₀^∞ q(t) e^{-t} · e^{-t} dt = Σ q_k k! / 2^{k+1}`.
    pub fn borel_integral(&self) -> Scalar {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, q)| {
                let weight = Scalar::from_bigint(factorial(k as u64))
                    / Scalar::from_bigint(num_traits::pow(num_bigint::BigInt::from(2), k + 1));
                q * &weight
            })
            .sum()
    }
}

/// Borel sum of `Σ_{n≥1} (-1)^{n+1} n^p` from
/// `g = d/dt (t d/dt)^{p-1} (t e^{-t})`; `p = 0` is `1 - 1 + 1 - ...` with
/// `g = e^{-t}`.
pub fn borel_sum_closed(p: usize) -> Scalar {
    let g = if p == 0 {
        ExpPolynomial::new(vec![Scalar::one()])
    } else {
        let mut h = ExpPolynomial::t_exp();
        for _ in 1..p {
            h = h.t_d_dt();
        }
        h.d_dt()
    };
    g.borel_integral()
}

/// Borel sum of `Σ c_n point^n`, continuing the Borel transform past its
/// radius with diagonal Padé approximants (or its exact rational form when
/// the transform coefficients satisfy a linear recurrence).
pub fn borel_sum_numeric(seq: &CoefficientSequence, point: &Scalar, digits: u32) -> Result<SummationResult> {
    let available = seq.capacity().unwrap_or(usize::MAX);
    let count = (2 * MAX_PADE_ORDER + 1).min(available);
    if count < 4 {
        return Err(Error::InsufficientTerms { needed: 4, available: count });
    }
    let c = seq.signed_prefix(count)?;
    let mut power = Scalar::one();
    let b: Vec<Scalar> = c
        .iter()
        .enumerate()
        .map(|(n, cn)| {
            if n > 0 {
                power = &power * point;
            }
            &(cn * &power) / &Scalar::from_bigint(factorial(n as u64))
        })
        .collect();
    let tol = tolerance_for(digits).max(1e-12);

    if let Some(gf) = detect_rational_gf(&b) {
        let g = PadeRational::new(gf.num, gf.den)?;
        check_path(&g)?;
        let value = laplace_at_one(&g, digits)?;
        let (n, m) = g.orders;
        return Ok(SummationResult {
            value: Scalar::from_f64(value),
            method: Method::Borel,
            diagnostics: vec![
                format!("Borel transform is rational of degree {n}/{m}"),
                format!("quadrature tolerance {:.1e}", tolerance_for(digits)),
            ],
        });
    }

    let mut values: Vec<(usize, f64)> = Vec::new();
    let mut skipped = Vec::new();
    let mut pole: Option<f64> = None;
    for m in 1..=(count - 1) / 2 {
        let g = match pade_from_coeffs(&b, m, m) {
            Ok(g) => g,
            Err(Error::SingularSystem { .. }) => {
                skipped.push(m);
                continue;
            }
            Err(e) => return Err(e),
        };
        if let Err(Error::PoleOnPath(t)) = check_path(&g) {
            pole.get_or_insert(t);
            skipped.push(m);
            continue;
        }
        values.push((m, laplace_at_one(&g, digits)?));
        if values.len() >= 3 {
            let spread = sweep_spread(&values);
            if spread <= tol {
                let (m_last, v) = *values.last().unwrap();
                let mut diagnostics = vec![
                    format!("diagonal Padé sweep [m/m], m = 1..{m_last}"),
                    format!("sweep spread {spread:.3e} over the last three orders"),
                ];
                if !skipped.is_empty() {
                    diagnostics.push(format!("skipped orders {skipped:?}"));
                }
                return Ok(SummationResult {
                    value: Scalar::from_f64(v),
                    method: Method::Borel,
                    diagnostics,
                });
            }
        }
    }
    if values.is_empty() {
        if let Some(t) = pole {
            return Err(Error::PoleOnPath(t));
        }
    }
    let spread = if values.len() >= 3 { sweep_spread(&values) } else { f64::INFINITY };
    Err(Error::ConvergenceFailure(format!(
        "Padé sweep did not stabilize: spread {spread:.3e} with {} usable orders",
        values.len()
    )))
}

fn sweep_spread(values: &[(usize, f64)]) -> f64 {
    let last = &values[values.len() - 3..];
    let hi = last.iter().map(|v| v.1).fold(f64::NEG_INFINITY, f64::max);
    let lo = last.iter().map(|v| v.1).fold(f64::INFINITY, f64::min);
    hi - lo
}

/// `PoleOnPath` if a denominator zero lies on `[0, ∞)`.
fn check_path(g: &PadeRational) -> Result<()> {
    let on_path = |z: &Complex64| z.re >= 0.0 && z.im.abs() <= 1e-9 * z.norm().max(1.0);
    match g.poles().iter().find(|z| on_path(z)) {
        Some(z) => Err(Error::PoleOnPath(z.re)),
        None => Ok(()),
    }
}

fn laplace_at_one(g: &PadeRational, digits: u32) -> Result<f64> {
    let num = poly::to_f64(&g.num);
    let den = poly::to_f64(&g.den);
    semi_infinite(
        |t| {
            let w = (-t).exp();
            if w == 0.0 {
                0.0
            } else {
                w * poly::eval_f64(&num, t) / poly::eval_f64(&den, t)
            }
        },
        digits,
    )
}
