//! Euler (Abel) summation: the `x → 1⁻` limit of `Σ a_n x^n`.

use super::generic::RECURRENCE_WINDOW;
use super::recurrence::{detect_rational_gf, RationalGf};
use super::{Method, SummationResult};
use crate::accel::richardson;
use crate::error::{Error, Result};
use crate::numerics::poly;
use crate::numerics::scalar::Scalar;
use crate::numerics::sequence::{CoefficientSequence, PartialSums};

/// First ladder index: the ladder points are `x_N = 1 - 1/N`.
pub const LADDER_START: usize = 10;
/// Richardson order applied to the ladder.
pub const LADDER_ORDER: usize = 10;
/// Most terms summed at a single ladder point.
pub const MAX_TERMS: usize = 1 << 15;

const EXTRA_DIGITS: u32 = 20;

/// `s_p = Σ_{n≥1} (-1)^{n+1} n^p`, the `p`-th derivative of `1/(1+e^{-x})` at
/// `x = 0`. Derivatives are carried as polynomials in `σ` using
/// `σ' = σ(1 - σ)`.
pub fn euler_alternating_power(p: usize) -> Scalar {
    // P_0(σ) = σ
    let mut poly_sigma = vec![Scalar::zero(), Scalar::one()];
    let sigma_prime = [Scalar::zero(), Scalar::one(), Scalar::from_int(-1)];
    for _ in 0..p {
        poly_sigma = poly::mul(&poly::derivative(&poly_sigma), &sigma_prime);
    }
    poly::eval(&poly_sigma, &Scalar::ratio(1, 2))
}

/// Abel limit of the series. Exact when the terms have a rational generating
/// function; otherwise the power series is evaluated on the ladder
/// `x_N = 1 - 1/N` and extrapolated to `N → ∞` with Richardson.
pub fn euler_sum(seq: &CoefficientSequence, digits: u32) -> Result<SummationResult> {
    if !seq.is_extendable() {
        let terms = seq.signed_prefix(seq.stored_len())?;
        let value: Scalar = terms.iter().sum();
        return Ok(SummationResult::exact(value, Method::Direct, "finite series"));
    }
    let window = seq.capacity().map_or(RECURRENCE_WINDOW, |c| c.min(RECURRENCE_WINDOW));
    let head = seq.signed_prefix(window)?;
    if let Some(gf) = detect_rational_gf(&head) {
        return abel_rational(&gf);
    }
    abel_ladder(seq, &head, digits)
}

fn abel_rational(gf: &RationalGf) -> Result<SummationResult> {
    let gf = gf.cancel_at_one();
    let den = poly::to_f64(&poly::squarefree(&gf.den));
    if let Some(r) = poly::roots(&den).into_iter().map(|z| z.norm()).find(|r| *r < 1.0 - 1e-9) {
        return Err(Error::ConvergenceFailure(format!(
            "generating function has a pole at |x| = {r:.6} inside the unit disk"
        )));
    }
    let value = gf.value_at_one().ok_or_else(|| {
        Error::ConvergenceFailure("generating function has a pole at x = 1; no finite Abel limit".into())
    })?;
    Ok(SummationResult::exact(
        value,
        Method::Euler,
        format!(
            "rational generating function of degree {}/{}, exact limit at x = 1",
            gf.num.len().saturating_sub(1),
            gf.den.len().saturating_sub(1)
        ),
    ))
}

/// `1 / limsup |c_n|^{1/n}` over the back half of `head`.
fn radius_estimate(head: &[Scalar]) -> f64 {
    let start = (head.len() / 2).max(1);
    let growth = head
        .iter()
        .enumerate()
        .skip(start)
        .filter(|(_, c)| !c.is_zero())
        .map(|(n, c)| c.to_f64().abs().ln() / n as f64)
        .fold(f64::NEG_INFINITY, f64::max);
    if growth == f64::NEG_INFINITY {
        f64::INFINITY
    } else {
        (-growth).exp()
    }
}

fn abel_ladder(seq: &CoefficientSequence, head: &[Scalar], digits: u32) -> Result<SummationResult> {
    let radius = radius_estimate(head);
    if radius.is_nan() || radius < 0.95 {
        return Err(Error::ConvergenceFailure(format!(
            "estimated radius of convergence {radius:.4} is below 1"
        )));
    }
    let work = digits + EXTRA_DIGITS;
    let last = LADDER_START + LADDER_ORDER + 1;
    let x_max = 1.0 - 1.0 / last as f64;
    let cutoff = -(work as f64) * std::f64::consts::LN_10;

    // enough terms that the tail is negligible at the largest ladder point
    let mut count = 2048;
    let terms = loop {
        let terms = seq.signed_prefix(count)?;
        let tail_small = terms[count - 64..].iter().enumerate().all(|(i, c)| {
            c.is_zero() || c.to_f64().abs().ln() + (count - 64 + i) as f64 * x_max.ln() < cutoff
        });
        if tail_small {
            break terms;
        }
        if count >= MAX_TERMS {
            return Err(Error::ConvergenceFailure(format!(
                "terms do not decay at x = {x_max:.4} within {MAX_TERMS} terms"
            )));
        }
        count *= 2;
    };
    let reals: Vec<Scalar> = terms.iter().map(|c| c.to_real(work)).collect();

    let mut values = vec![Scalar::zero(); last + 1];
    for (n, slot) in values.iter_mut().enumerate().skip(LADDER_START) {
        let x = Scalar::ratio(n as i64 - 1, n as i64).to_real(work);
        *slot = poly::eval(&reals, &x);
    }
    let sums = PartialSums::new(values);
    let r0 = richardson(&sums, LADDER_ORDER, LADDER_START)?;
    let r1 = richardson(&sums, LADDER_ORDER, LADDER_START + 1)?;
    let spread = (&r1 - &r0).abs().to_f64();
    let scale = r1.abs().to_f64().max(1.0);
    if spread.is_nan() || spread > 1e-6 * scale {
        return Err(Error::ConvergenceFailure(format!(
            "ladder values do not stabilize: extrapolation spread {spread:.3e}"
        )));
    }
    Ok(SummationResult {
        value: r1.to_real(digits),
        method: Method::Euler,
        diagnostics: vec![
            format!("ladder x_N = 1 - 1/N, N = {LADDER_START}..{last}"),
            format!("{count} terms per ladder point, radius estimate {radius:.4}"),
            format!("richardson order {LADDER_ORDER}, extrapolation spread {spread:.3e}"),
        ],
    })
}
