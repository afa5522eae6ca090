//! `u_t = u_xx` on `[0, π]` with `u(x, 0) = f(x)`, `u(0, t) = g(t)` and
//! `u(π, t) = h(t)`, solved mode by mode.
//!
//! With `φ_n = (-1)^{n+1} h + g`, each coefficient obeys
//! `ȧ_n + n² a_n = (2n/π) φ_n(t)`, so
//! `a_n(t) = e^{-n²t} a_n(0) + (2n/π) ∫₀ᵗ e^{-n²(t-s)} φ_n(s) ds`.
//! The integral is taken in the variable `u = n²(t - s)`, which never forms
//! `e^{+n²s}`.

use std::f64::consts::PI;

use super::handle::FunctionHandle;
use super::sine::sine_coefficients;
use crate::error::{Error, Result};
use crate::numerics::quadrature::integrate;

/// Upper cut of the convolution variable `u = n²(t - s)`; `e^{-60}` is below
/// double precision.
pub const CONVOLUTION_CUTOFF: f64 = 60.0;
/// Coefficient magnitudes below this are ignored by the decay check.
pub const DECAY_CHECK_FLOOR: f64 = 1e-13;
/// Allowed growth of `|r_n| n³` from the lower to the upper half of the modes.
pub const DECAY_CHECK_FACTOR: f64 = 1.5;

const QUADRATURE_TOL: f64 = 1e-13;

#[derive(Clone, Debug)]
pub struct HeatProblem {
    pub f: FunctionHandle,
    pub g: FunctionHandle,
    pub h: FunctionHandle,
    pub modes: usize,
    pub time_grid: Vec<f64>,
}

impl HeatProblem {
    pub fn new(f: FunctionHandle, g: FunctionHandle, h: FunctionHandle, modes: usize, time_grid: Vec<f64>) -> Result<Self> {
        if modes == 0 {
            return Err(Error::InvalidInput("at least one mode is required".into()));
        }
        if time_grid.iter().any(|t| !t.is_finite() || *t < 0.0) {
            return Err(Error::InvalidInput("times must be finite and non-negative".into()));
        }
        if time_grid.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidInput("times must be strictly increasing".into()));
        }
        Ok(Self {
            f,
            g,
            h,
            modes,
            time_grid,
        })
    }
}

/// The subtracted boundary layer `g(t)(1 - x/π) + h(t)(x/π)` at each time.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryLayer {
    pub g: Vec<f64>,
    pub h: Vec<f64>,
}

impl BoundaryLayer {
    pub const DESCRIPTION: &'static str = "g(t)·(1 - x/π) + h(t)·(x/π)";

    pub fn eval(&self, k: usize, x: f64) -> f64 {
        self.g[k] * (1.0 - x / PI) + self.h[k] * (x / PI)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct HeatSolution {
    pub time_grid: Vec<f64>,
    /// `mode_coeffs[k][n-1]` is `a_n(t_k)`, or the residual
    /// `a_n(t_k) - 2φ_n(t_k)/(πn)` when accelerated.
    pub mode_coeffs: Vec<Vec<f64>>,
    pub accelerated: bool,
    pub closed_part: Option<BoundaryLayer>,
}

impl HeatSolution {
    pub fn modes(&self) -> usize {
        self.mode_coeffs.first().map_or(0, Vec::len)
    }

    /// `u(x, t_k)`.
    pub fn eval(&self, k: usize, x: f64) -> f64 {
        let series: f64 = self.mode_coeffs[k]
            .iter()
            .enumerate()
            .map(|(i, a)| a * ((i + 1) as f64 * x).sin())
            .sum();
        series + self.closed_part.as_ref().map_or(0.0, |b| b.eval(k, x))
    }

    /// `u(x_j, t_k)` on `points` equally spaced interior points.
    pub fn profile(&self, k: usize, points: usize) -> Vec<(f64, f64)> {
        (1..=points)
            .map(|j| {
                let x = PI * j as f64 / (points + 1) as f64;
                (x, self.eval(k, x))
            })
            .collect()
    }

    /// Rough bound on the truncation error at `x` and time `t_k`, from the
    /// decay of the last quarter of the stored coefficients.
    pub fn truncation_estimate(&self, k: usize, x: f64) -> f64 {
        let coeffs = &self.mode_coeffs[k];
        let n_max = coeffs.len();
        let start = (3 * n_max / 4).max(1);
        let power = if self.accelerated { 3 } else { 1 };
        let c = (start..=n_max)
            .map(|n| coeffs[n - 1].abs() * (n as f64).powi(power))
            .fold(0.0, f64::max);
        let nf = n_max as f64;
        if self.accelerated {
            c / (2.0 * nf * nf)
        } else {
            // partial sums of Σ sin(nx)/n and Σ (-1)^n sin(nx)/n
            let edge = (x / 2.0).sin().min((x / 2.0).cos()).max(1e-3);
            c / (nf * edge)
        }
    }
}

/// Mode coefficients on the time grid. When `accelerate` is set the `1/n`
/// tail `2φ_n(t)/(πn)` is replaced by the closed-form boundary layer and the
/// stored residuals must decay like `n^{-3}`.
pub fn heat_solve(p: &HeatProblem, accelerate: bool) -> Result<HeatSolution> {
    let initial: Vec<f64> = sine_coefficients(&p.f, p.modes, 16)?
        .coeffs
        .iter()
        .map(|a| a.to_f64())
        .collect();
    let mut mode_coeffs = Vec::with_capacity(p.time_grid.len());
    for &t in &p.time_grid {
        let row = (1..=p.modes)
            .map(|n| mode_at(p, &initial, n, t, accelerate))
            .collect::<Result<Vec<_>>>()?;
        mode_coeffs.push(row);
    }
    let closed_part = accelerate.then(|| BoundaryLayer {
        g: p.time_grid.iter().map(|&t| p.g.eval(t)).collect(),
        h: p.time_grid.iter().map(|&t| p.h.eval(t)).collect(),
    });
    let solution = HeatSolution {
        time_grid: p.time_grid.clone(),
        mode_coeffs,
        accelerated: accelerate,
        closed_part,
    };
    if accelerate {
        check_decay(&solution)?;
    }
    Ok(solution)
}

fn mode_at(p: &HeatProblem, initial: &[f64], n: usize, t: f64, accelerate: bool) -> Result<f64> {
    let nf = n as f64;
    let n2 = nf * nf;
    let parity = if n % 2 == 1 { 1.0 } else { -1.0 };
    let phi = |s: f64| parity * p.h.eval(s) + p.g.eval(s);
    let decay = (-n2 * t).exp();
    let weight = 2.0 / (PI * nf);
    let free = decay * initial[n - 1];
    let upper = (n2 * t).min(CONVOLUTION_CUTOFF);

    // constant boundary data integrate in closed form
    let constant_phi = match (p.g.is_constant(), p.h.is_constant()) {
        (Some(g), Some(h)) => Some(parity * h + g),
        _ => None,
    };
    if let Some(phi0) = constant_phi {
        return Ok(if accelerate {
            free - weight * phi0 * decay
        } else {
            free - weight * phi0 * (-n2 * t).exp_m1()
        });
    }
    if accelerate {
        // ∫ e^{-u} (φ(t - u/n²) - φ(t)) du - φ(t) e^{-n²t}
        let phi_t = phi(t);
        let conv = integrate(|u| (-u).exp() * (phi(t - u / n2) - phi_t), 0.0, upper, QUADRATURE_TOL)?;
        Ok(free + weight * (conv - phi_t * decay))
    } else {
        let conv = integrate(|u| (-u).exp() * phi(t - u / n2), 0.0, upper, QUADRATURE_TOL)?;
        Ok(free + weight * conv)
    }
}

/// Past `t = 0`, `|r_n| n³` may not grow from the lower half of the modes to
/// the upper half.
fn check_decay(s: &HeatSolution) -> Result<()> {
    let modes = s.modes();
    if modes < 4 {
        return Ok(());
    }
    for (k, &t) in s.time_grid.iter().enumerate() {
        if t == 0.0 {
            continue;
        }
        let weighted = |range: std::ops::Range<usize>| {
            range
                .map(|i| (i + 1, s.mode_coeffs[k][i].abs()))
                .filter(|(_, r)| *r >= DECAY_CHECK_FLOOR)
                .map(|(n, r)| r * (n as f64).powi(3))
                .fold(0.0, f64::max)
        };
        let lower = weighted(0..modes / 2);
        let upper = weighted(modes / 2..modes);
        if upper > DECAY_CHECK_FACTOR * lower && upper > 0.0 {
            return Err(Error::ModeBudgetExceeded(format!(
                "at t = {t}, residual coefficients do not decay like n^-3 within {modes} modes"
            )));
        }
    }
    Ok(())
}
