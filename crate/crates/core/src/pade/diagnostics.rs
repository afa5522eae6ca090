//! Finite-prefix evidence for Stieltjes character: Hankel positivity,
//! Carleman growth, and a Herglotz sign probe.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

use super::approximant::PadeRational;
use super::moments::MomentSequence;
use crate::error::{Error, Result};
use crate::numerics::linalg;
use crate::numerics::scalar::{factorial, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HankelStatus {
    Positive,
    Zero,
    Negative,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HankelEntry {
    pub order: usize,
    /// `det(a_{i+j+1})` rather than `det(a_{i+j})`.
    pub shifted: bool,
    pub determinant: Scalar,
    pub status: HankelStatus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    /// Some determinant vanishes but none is negative.
    Boundary,
    Fail,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HankelReport {
    pub entries: Vec<HankelEntry>,
    pub verdict: Verdict,
    /// Smallest order with a negative determinant.
    pub first_failure: Option<usize>,
}

fn hankel(a: &[Scalar], order: usize, shift: usize) -> Scalar {
    let matrix = (0..order)
        .map(|i| (0..order).map(|j| a[i + j + shift].clone()).collect())
        .collect();
    linalg::determinant(matrix)
}

fn status(det: &Scalar) -> HankelStatus {
    match det.signum() {
        1 => HankelStatus::Positive,
        0 => HankelStatus::Zero,
        _ => HankelStatus::Negative,
    }
}

/// Leading principal determinants of `(a_{i+j})` and `(a_{i+j+1})` for every
/// order the prefix supports.
pub fn stieltjes_hankel_check(a: &MomentSequence) -> Result<HankelReport> {
    if a.len() < 2 {
        return Err(Error::InsufficientTerms {
            needed: 2,
            available: a.len(),
        });
    }
    let mut entries = Vec::new();
    let mut order = 1;
    loop {
        let mut any = false;
        for shift in 0..2 {
            if 2 * order - 2 + shift < a.len() {
                let det = hankel(&a.a, order, shift);
                entries.push(HankelEntry {
                    order,
                    shifted: shift == 1,
                    status: status(&det),
                    determinant: det,
                });
                any = true;
            }
        }
        if !any {
            break;
        }
        order += 1;
    }
    let first_failure = entries
        .iter()
        .find(|e| e.status == HankelStatus::Negative)
        .map(|e| e.order);
    let verdict = if first_failure.is_some() {
        Verdict::Fail
    } else if entries.iter().any(|e| e.status == HankelStatus::Zero) {
        Verdict::Boundary
    } else {
        Verdict::Pass
    };
    Ok(HankelReport {
        entries,
        verdict,
        first_failure,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CarlemanReport {
    /// Fitted `c` in `a_n ≈ K (2n)! c^n`.
    pub c: f64,
    /// Fitted exponent `β` in `a_{n+1}/a_n ≈ (2n+2)(2n+1) n^β`.
    pub excess_exponent: f64,
    pub satisfied: bool,
}

/// Exponents above this are read as super-`(2n)!` growth.
pub const CARLEMAN_EXPONENT_BOUND: f64 = 0.5;

/// Natural log of a positive rational, without overflowing `f64`.
pub fn ln_rational(r: &BigRational) -> f64 {
    ln_bigint(r.numer()) - ln_bigint(r.denom())
}

fn ln_bigint(n: &BigInt) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        return n.abs().to_string().parse::<f64>().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    let top: BigInt = n.abs() >> shift;
    top.to_string().parse::<f64>().unwrap_or(f64::INFINITY).ln() + shift as f64 * std::f64::consts::LN_2
}

fn least_squares_slope(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx) * (a - mx)).sum();
    sxy / sxx
}

/// Growth test against `(2n)! c^n`: the local ratios of `a_n/(2n)!` are
/// regressed on `ln n`; a bounded (non-positive up to noise) exponent is
/// taken as evidence that the condition holds.
pub fn carleman_check(a: &MomentSequence) -> Result<CarlemanReport> {
    if a.len() < 4 {
        return Err(Error::InsufficientTerms {
            needed: 4,
            available: a.len(),
        });
    }
    let mut logs = Vec::with_capacity(a.len());
    for (n, v) in a.a.iter().enumerate() {
        if !v.is_positive() {
            return Err(Error::InvalidInput(format!("moment a_{n} is not positive")));
        }
        let scaled = v.to_rational() / BigRational::from_integer(factorial(2 * n as u64));
        logs.push(ln_rational(&scaled));
    }
    let ns: Vec<f64> = (0..logs.len()).map(|n| n as f64).collect();
    let c = least_squares_slope(&ns, &logs).exp();
    let start = 1;
    let x: Vec<f64> = (start..logs.len() - 1).map(|n| (n as f64).ln()).collect();
    let y: Vec<f64> = (start..logs.len() - 1).map(|n| logs[n + 1] - logs[n]).collect();
    let excess_exponent = least_squares_slope(&x, &y);
    Ok(CarlemanReport {
        c,
        excess_exponent,
        satisfied: excess_exponent <= CARLEMAN_EXPONENT_BOUND,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct HerglotzReport {
    pub checked: usize,
    /// Points skipped because they sit too close to a pole.
    pub skipped: usize,
    /// Points where `Im(-p(z))` vanished.
    pub degenerate: usize,
    /// `(z, p(z))` pairs with `Im(-p(z))·Im(z) < 0`.
    pub violations: Vec<(Complex64, Complex64)>,
}

impl HerglotzReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Deterministic sample points on rays in both half planes.
fn sample_points(samples: usize) -> Vec<Complex64> {
    let samples = samples.max(2);
    let rays = ((samples as f64).sqrt().ceil() as usize).max(2);
    let radii = samples.div_ceil(rays).max(1);
    let mut out = Vec::with_capacity(2 * rays * radii);
    for i in 0..rays {
        let theta = std::f64::consts::PI * (i as f64 + 0.5) / rays as f64;
        for j in 0..radii {
            let r = 10f64.powf(-2.0 + 4.0 * (j as f64 + 0.5) / radii as f64);
            let z = Complex64::from_polar(r, theta);
            out.push(z);
            out.push(z.conj());
        }
    }
    out
}

/// Check `Im(-p(z))·Im(z) ≥ 0` at sampled points off the real axis.
pub fn herglotz_probe(p: &PadeRational, samples: usize) -> HerglotzReport {
    let num: Vec<f64> = p.num.iter().map(Scalar::to_f64).collect();
    let den: Vec<f64> = p.den.iter().map(Scalar::to_f64).collect();
    let mut report = HerglotzReport {
        checked: 0,
        skipped: 0,
        degenerate: 0,
        violations: Vec::new(),
    };
    for z in sample_points(samples) {
        let d = crate::numerics::poly::eval_complex(&den, z);
        let scale: f64 = den.iter().enumerate().map(|(k, c)| c.abs() * z.norm().powi(k as i32)).sum();
        if d.norm() <= 1e-10 * scale.max(1e-300) {
            report.skipped += 1;
            continue;
        }
        let value = crate::numerics::poly::eval_complex(&num, z) / d;
        report.checked += 1;
        let product = (-value).im * z.im;
        let tol = 1e-12 * value.norm().max(1.0) * z.im.abs();
        if product.abs() <= tol {
            report.degenerate += 1;
        } else if product < 0.0 {
            report.violations.push((z, value));
        }
    }
    report
}
