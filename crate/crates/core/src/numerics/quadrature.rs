//! Double-precision quadrature: exp-sinh on `[0, ∞)` and adaptive
//! Gauss–Kronrod on finite intervals.
//!
//! Requested accuracy is capped near `1e-14`, the practical floor for `f64`.

use std::f64::consts::FRAC_PI_2;

use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Smallest tolerance the `f64` rules will aim for; relative to the value
/// once the integral exceeds one.
pub const TOLERANCE_FLOOR: f64 = 1e-14;

const MAX_LEVEL: u32 = 12;
const U_MAX: f64 = 7.0;

/// Absolute tolerance corresponding to a digit budget.
pub fn tolerance_for(digits: u32) -> f64 {
    10f64.powi(-(digits.min(300) as i32)).max(TOLERANCE_FLOOR)
}

/// `∫₀^∞ f(t) dt` for integrands that decay at least exponentially.
pub fn semi_infinite<F: Fn(f64) -> f64>(f: F, digits: u32) -> Result<f64> {
    let tol = tolerance_for(digits);
    let mut previous: Option<f64> = None;
    let mut h = 1.0;
    for level in 0..=MAX_LEVEL {
        let estimate = exp_sinh_sum(&f, h)?;
        if let Some(prev) = previous {
            let diff = (estimate - prev).abs();
            if level >= 3 && diff <= tol.max(TOLERANCE_FLOOR * estimate.abs()) {
                return Ok(estimate);
            }
        }
        previous = Some(estimate);
        h /= 2.0;
    }
    Err(Error::ConvergenceFailure(format!(
        "exp-sinh refinement did not reach tolerance {tol:e}"
    )))
}

/// [`semi_infinite`] returning a real [`Scalar`].
pub fn quadrature_semi_infinite<F: Fn(f64) -> f64>(f: F, digits: u32) -> Result<Scalar> {
    let value = semi_infinite(f, digits)?;
    Ok(Scalar::from_f64(value))
}

fn exp_sinh_sum<F: Fn(f64) -> f64>(f: &F, h: f64) -> Result<f64> {
    let term = |u: f64| -> Result<Option<f64>> {
        let t = (FRAC_PI_2 * u.sinh()).exp();
        if t == 0.0 || !t.is_finite() {
            return Ok(None);
        }
        let w = FRAC_PI_2 * u.cosh() * t;
        let v = f(t);
        if v.is_finite() {
            Ok(Some(w * v))
        } else if t > 1.0 {
            // overflowing tail of a decaying integrand
            Ok(None)
        } else {
            Err(Error::ConvergenceFailure(format!("integrand not finite at t = {t:e}")))
        }
    };

    let mut sum = term(0.0)?.unwrap_or(0.0);
    for direction in [1.0, -1.0] {
        let mut k = 1u32;
        let mut quiet = 0;
        loop {
            let u = direction * f64::from(k) * h;
            if u.abs() > U_MAX {
                break;
            }
            match term(u)? {
                None => break,
                Some(v) => {
                    sum += v;
                    if v.abs() <= 1e-18 * sum.abs() || v == 0.0 {
                        quiet += 1;
                        if quiet >= 3 && !(-3.0..=1.0).contains(&u) {
                            break;
                        }
                    } else {
                        quiet = 0;
                    }
                }
            }
            k += 1;
        }
    }
    Ok(sum * h)
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(centre);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(centre - dx) + f(centre + dx);
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

/// Adaptive Gauss–Kronrod (7/15) integration of `f` over `[a, b]`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    let tol = tol.max(TOLERANCE_FLOOR * 1e-2);
    let mut stack = vec![(a, b, tol, 0u32)];
    let mut total = 0.0;
    while let Some((lo, hi, local_tol, depth)) = stack.pop() {
        let (value, err) = kronrod(&f, lo, hi);
        if !value.is_finite() {
            return Err(Error::ConvergenceFailure(format!(
                "integrand not finite on [{lo}, {hi}]"
            )));
        }
        let scale_floor = 50.0 * f64::EPSILON * value.abs();
        if err <= local_tol.max(scale_floor) {
            total += value;
        } else if depth >= 40 {
            return Err(Error::ConvergenceFailure(format!(
                "adaptive quadrature stalled on [{lo}, {hi}] with error {err:e}"
            )));
        } else {
            let mid = 0.5 * (lo + hi);
            stack.push((lo, mid, local_tol / 2.0, depth + 1));
            stack.push((mid, hi, local_tol / 2.0, depth + 1));
        }
    }
    Ok(total)
}

/// [`integrate`] after splitting `[a, b]` into `pieces` equal panels, useful
/// for oscillatory integrands.
pub fn integrate_panels<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, pieces: usize, tol: f64) -> Result<f64> {
    let pieces = pieces.max(1);
    let width = (b - a) / pieces as f64;
    let mut total = 0.0;
    for i in 0..pieces {
        let lo = a + width * i as f64;
        let hi = if i + 1 == pieces { b } else { lo + width };
        total += integrate(&f, lo, hi, tol / pieces as f64)?;
    }
    Ok(total)
}
