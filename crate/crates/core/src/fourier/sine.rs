//! Sine series on `[0, π]` and their `1/n` tails.

use std::f64::consts::PI;

use super::handle::FunctionHandle;
use crate::error::{Error, Result};
use crate::numerics::quadrature::{integrate_panels, tolerance_for};
use crate::numerics::scalar::Scalar;

/// Most points used per parity when extrapolating `n·a_n`.
pub const EXTRAPOLATION_POINTS: usize = 4;
/// Relative disagreement between extrapolation windows that counts as a
/// tail mismatch.
pub const TAIL_TOLERANCE: f64 = 1e-3;

/// `f(x) = Σ_{n≥1} a_n sin(nx)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SineSeries {
    /// `a_1..a_N`
    pub coeffs: Vec<Scalar>,
    /// `(c_even, c_odd)` with `a_n ≈ 2c/(πn)` for the matching parity of `n`.
    pub tail_model: Option<(Scalar, Scalar)>,
}

impl SineSeries {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        Self {
            coeffs,
            tail_model: None,
        }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `a_n` for `n ≥ 1`.
    pub fn coeff(&self, n: usize) -> &Scalar {
        &self.coeffs[n - 1]
    }

    /// Partial sum through `a_N` at `x`.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| a.to_f64() * ((i + 1) as f64 * x).sin())
            .sum()
    }
}

/// `a_n = (2/π) ∫₀^π f(x) sin(nx) dx` for `n = 1..=count`.
pub fn sine_coefficients(f: &FunctionHandle, count: usize, digits: u32) -> Result<SineSeries> {
    let coeffs = match f {
        FunctionHandle::Constant(c) => polynomial_coefficients(std::slice::from_ref(c), count, digits),
        FunctionHandle::Polynomial(p) => polynomial_coefficients(p, count, digits),
        FunctionHandle::Sine { k, amplitude } => (1..=count)
            .map(|n| if n == *k { amplitude.clone() } else { Scalar::zero() })
            .collect(),
        FunctionHandle::Samples { xs, .. } => {
            let mut knots: Vec<f64> = vec![0.0];
            knots.extend(xs.iter().copied().filter(|x| *x > 0.0 && *x < PI));
            knots.push(PI);
            let values: Vec<f64> = knots.iter().map(|x| f.eval(*x)).collect();
            (1..=count)
                .map(|n| Scalar::from_f64(2.0 / PI * linear_sine_integral(&knots, &values, n)))
                .collect()
        }
        FunctionHandle::Closure(_) => {
            let tol = tolerance_for(digits);
            (1..=count)
                .map(|n| {
                    let nf = n as f64;
                    let v = integrate_panels(|x| f.eval(x) * (nf * x).sin(), 0.0, PI, n + 1, tol)?;
                    Ok(Scalar::from_f64(2.0 / PI * v))
                })
                .collect::<Result<Vec<_>>>()?
        }
    };
    Ok(SineSeries::new(coeffs))
}

/// Exact `∫ y(x) sin(nx) dx` for `y` linear between the knots.
fn linear_sine_integral(knots: &[f64], values: &[f64], n: usize) -> f64 {
    let nf = n as f64;
    let antiderivative = |x: f64, alpha: f64, beta: f64| {
        -(alpha + beta * x) * (nf * x).cos() / nf + beta * (nf * x).sin() / (nf * nf)
    };
    knots
        .windows(2)
        .zip(values.windows(2))
        .map(|(x, y)| {
            let beta = (y[1] - y[0]) / (x[1] - x[0]);
            let alpha = y[0] - beta * x[0];
            antiderivative(x[1], alpha, beta) - antiderivative(x[0], alpha, beta)
        })
        .sum()
}

/// Closed-form coefficients of a polynomial. With `I_k = ∫₀^π x^k sin(nx)`
/// and `J_k = ∫₀^π x^k cos(nx)`: `I_0 = (1 - (-1)^n)/n`, `J_0 = 0`,
/// `I_k = -π^k (-1)^n / n + (k/n) J_{k-1}`, `J_k = -(k/n) I_{k-1}`.
fn polynomial_coefficients(p: &[Scalar], count: usize, digits: u32) -> Vec<Scalar> {
    let pi = Scalar::pi(digits);
    let two_over_pi = &Scalar::from_int(2) / &pi;
    (1..=count)
        .map(|n| {
            let nn = Scalar::from_int(n as i64);
            let sign = if n % 2 == 0 { Scalar::one() } else { Scalar::from_int(-1) };
            let mut i_prev = &(&Scalar::one() - &sign) / &nn;
            let mut j_prev = Scalar::zero();
            let mut pi_k = Scalar::one();
            let mut acc = &p[0] * &i_prev;
            for (k, pk) in p.iter().enumerate().skip(1) {
                pi_k = &pi_k * &pi;
                let kk = Scalar::from_int(k as i64);
                let i_k = &(-(&(&pi_k * &sign) / &nn)) + &(&(&kk / &nn) * &j_prev);
                let j_k = -(&(&kk / &nn) * &i_prev);
                acc = &acc + &(pk * &i_k);
                i_prev = i_k;
                j_prev = j_k;
            }
            if acc.is_zero() {
                Scalar::zero()
            } else {
                &two_over_pi * &acc
            }
        })
        .collect()
}

/// Neville extrapolation to `h = 0` of values at the abscissae `h`.
fn extrapolate_to_zero(h: &[Scalar], v: &[Scalar]) -> Scalar {
    let mut p = v.to_vec();
    let m = p.len();
    for step in 1..m {
        for i in 0..m - step {
            let j = i + step;
            // p_{i..j}(0) = (h_i p_{i+1..j} - h_j p_{i..j-1}) / (h_i - h_j)
            p[i] = &(&(&h[i] * &p[i + 1]) - &(&h[j] * &p[i])) / &(&h[i] - &h[j]);
        }
    }
    p[0].clone()
}

/// Limit of `n·a_n` over the largest `n` of one parity, and the disagreement
/// with the window one point shorter.
fn parity_limit(s: &SineSeries, odd: bool) -> (Scalar, f64) {
    let ns: Vec<usize> = (1..=s.len()).filter(|n| (n % 2 == 1) == odd).collect();
    let take = ns.len().min(EXTRAPOLATION_POINTS);
    let window = &ns[ns.len() - take..];
    let h: Vec<Scalar> = window.iter().map(|&n| Scalar::ratio(1, n as i64)).collect();
    let v: Vec<Scalar> = window.iter().map(|&n| &Scalar::from_int(n as i64) * s.coeff(n)).collect();
    let full = extrapolate_to_zero(&h, &v);
    let short = extrapolate_to_zero(&h[1..], &v[1..]);
    let spread = (&full - &short).abs().to_f64();
    (full, spread)
}

/// `(f(0), f(π))` from `a_n ~ 2(f(0) + (-1)^{n+1} f(π)) / (πn)`.
pub fn endpoint_recovery(s: &SineSeries) -> Result<(Scalar, Scalar)> {
    let (f0, fpi, _) = endpoint_limits(s)?;
    Ok((f0, fpi))
}

/// The endpoint values together with the odd and even limits of `n·a_n`.
fn endpoint_limits(s: &SineSeries) -> Result<(Scalar, Scalar, (Scalar, Scalar))> {
    if s.len() < 8 {
        return Err(Error::InsufficientTerms {
            needed: 8,
            available: s.len(),
        });
    }
    let (odd, odd_spread) = parity_limit(s, true);
    let (even, even_spread) = parity_limit(s, false);
    for (label, value, spread) in [("odd", &odd, odd_spread), ("even", &even, even_spread)] {
        if spread.is_nan() || spread > TAIL_TOLERANCE * value.abs().to_f64().max(1.0) {
            return Err(Error::TailMismatch(format!(
                "{label}-n extrapolations of n·a_n disagree by {spread:.3e}"
            )));
        }
    }
    // c_odd = f0 + fpi, c_even = f0 - fpi, and n·a_n → 2c/π
    let half_pi = |v: &Scalar| {
        if v.is_zero() {
            Scalar::zero()
        } else {
            &(v * &Scalar::pi(v.digits().unwrap_or(crate::numerics::scalar::DEFAULT_DIGITS))) / &Scalar::from_int(2)
        }
    };
    let (c_odd, c_even) = (half_pi(&odd), half_pi(&even));
    let half = Scalar::ratio(1, 2);
    let f0 = &(&c_odd + &c_even) * &half;
    let fpi = &(&c_odd - &c_even) * &half;
    Ok((f0, fpi, (odd, even)))
}

/// `f(0)·(1 - x/π) + f(π)·(x/π)`, whose sine coefficients are exactly the
/// `1/n` tail `2(f(0) + (-1)^{n+1} f(π)) / (πn)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryTerm {
    pub f0: Scalar,
    pub fpi: Scalar,
}

impl BoundaryTerm {
    pub fn eval(&self, x: f64) -> f64 {
        self.f0.to_f64() * (1.0 - x / PI) + self.fpi.to_f64() * (x / PI)
    }

    pub fn is_zero(&self) -> bool {
        self.f0.is_zero() && self.fpi.is_zero()
    }
}

impl std::fmt::Display for BoundaryTerm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}·(1 - x/π) + {}·(x/π)", self.f0.render(12), self.fpi.render(12))
    }
}

/// Split `s` into the closed-form boundary term and a residual series whose
/// coefficients no longer carry the `1/n` tail.
pub fn gibbs_accelerate(s: &SineSeries) -> Result<(BoundaryTerm, SineSeries)> {
    let (f0, fpi, (odd, even)) = endpoint_limits(s)?;
    let residual = s
        .coeffs
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let n = i + 1;
            let limit = if n % 2 == 1 { &odd } else { &even };
            a - &(limit / &Scalar::from_int(n as i64))
        })
        .collect();
    Ok((BoundaryTerm { f0, fpi }, SineSeries::new(residual)))
}

/// `(2/π) Si(α) = (2/π) ∫₀^α sin(s)/s ds`, the limit profile of the Gibbs
/// overshoot.
pub fn gibbs_overshoot(alpha: &Scalar) -> Result<Scalar> {
    if alpha.is_negative() {
        return Err(Error::DomainError("alpha must be non-negative".into()));
    }
    if alpha.is_zero() {
        return Ok(Scalar::zero());
    }
    let a = alpha.to_f64();
    let sinc = |s: f64| if s == 0.0 { 1.0 } else { s.sin() / s };
    let pieces = (a / PI).ceil() as usize + 1;
    let si = integrate_panels(sinc, 0.0, a, pieces, 1e-15)?;
    Ok(Scalar::from_f64(2.0 / PI * si))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_one() {
        let s = sine_coefficients(&FunctionHandle::named("1").unwrap(), 6, 30).unwrap();
        for n in 1..=6 {
            let expected = if n % 2 == 1 { 4.0 / (n as f64 * PI) } else { 0.0 };
            assert!((s.coeff(n).to_f64() - expected).abs() < 1e-15);
        }
        assert_eq!(*s.coeff(2), Scalar::zero());
    }

    #[test]
    fn parabola_closed_form_and_quadrature() {
        let exact = sine_coefficients(&FunctionHandle::named("x(pi-x)").unwrap(), 7, 30).unwrap();
        let quad = sine_coefficients(&FunctionHandle::closure(|x| x * (PI - x)), 7, 14).unwrap();
        for n in 1..=7 {
            let expected = if n % 2 == 1 { 8.0 / (PI * (n as f64).powi(3)) } else { 0.0 };
            assert!((exact.coeff(n).to_f64() - expected).abs() < 1e-15);
            assert!((quad.coeff(n).to_f64() - expected).abs() < 1e-13);
        }
    }

    #[test]
    fn samples_use_exact_linear_integrals() {
        let xs: Vec<f64> = (0..=10).map(|i| PI * i as f64 / 10.0).collect();
        let ys: Vec<f64> = xs.iter().map(|x| 2.0 * x).collect();
        let s = sine_coefficients(&FunctionHandle::samples(xs, ys).unwrap(), 5, 14).unwrap();
        let exact = sine_coefficients(&FunctionHandle::Polynomial(vec![Scalar::zero(), Scalar::from_int(2)]), 5, 30).unwrap();
        for n in 1..=5 {
            assert!((s.coeff(n).to_f64() - exact.coeff(n).to_f64()).abs() < 1e-13);
        }
    }

    #[test]
    fn endpoints_of_saw_tail() {
        let coeffs = (1..=40).map(|n| Scalar::from_f64((1.0 / n as f64).exp_m1())).collect();
        let (f0, fpi) = endpoint_recovery(&SineSeries::new(coeffs)).unwrap();
        assert!((f0.to_f64() - PI / 2.0).abs() < 1e-6);
        assert!(fpi.to_f64().abs() < 1e-6);
    }

    #[test]
    fn saw_tail_residual() {
        let coeffs = (1..=40).map(|n| Scalar::from_f64((1.0 / n as f64).exp_m1())).collect();
        let (term, residual) = gibbs_accelerate(&SineSeries::new(coeffs)).unwrap();
        assert!((term.f0.to_f64() - PI / 2.0).abs() < 1e-6);
        for n in 1..=40 {
            let x = 1.0 / n as f64;
            assert!((residual.coeff(n).to_f64() - (x.exp_m1() - x)).abs() < 1e-6 * x);
        }
    }

    #[test]
    fn fast_decay_gives_zero_endpoints() {
        let s = SineSeries::new((1..=12).map(|n| Scalar::ratio(1, (n * n * n) as i64)).collect());
        let (term, residual) = gibbs_accelerate(&s).unwrap();
        assert!(term.is_zero());
        assert_eq!(residual, s);
    }

    #[test]
    fn slow_decay_is_a_mismatch() {
        let s = SineSeries::new((1..=12).map(|n| Scalar::from_f64(1.0 / (n as f64).sqrt())).collect());
        assert!(matches!(endpoint_recovery(&s), Err(Error::TailMismatch(_))));
    }

    #[test]
    fn overshoot() {
        let v = gibbs_overshoot(&Scalar::pi(30)).unwrap().to_f64();
        assert!((v - 1.178_979_744_472_167).abs() < 1e-12);
        assert_eq!(gibbs_overshoot(&Scalar::zero()).unwrap(), Scalar::zero());
        assert!((gibbs_overshoot(&Scalar::from_int(200)).unwrap().to_f64() - 1.0).abs() < 1e-2);
    }
}
