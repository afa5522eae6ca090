//! Continued exponentials `a_0 exp(a_1 z exp(a_2 z exp(...)))`.

use crate::error::{Error, Result};
use crate::numerics::scalar::Scalar;
use crate::numerics::sequence::{CoefficientSequence, SignConvention};

/// `exp(u)` to `len` terms for a series with `u_0 = 0`.
fn exp_series(u: &[Scalar], len: usize) -> Vec<Scalar> {
    let mut h = vec![Scalar::one()];
    for n in 1..len {
        let mut acc = Scalar::zero();
        for k in 1..=n {
            if let Some(uk) = u.get(k) {
                if !uk.is_zero() {
                    let weight = Scalar::from_int(k as i64);
                    acc = &acc + &(&(&weight * uk) * &h[n - k]);
                }
            }
        }
        h.push(&acc / &Scalar::from_int(n as i64));
    }
    h
}

fn expand(a: &[Scalar], k: usize) -> Vec<Scalar> {
    let len = k + 1;
    let mut inner = vec![Scalar::one()];
    for aj in a.iter().skip(1).take(k).rev() {
        // u = a_j z · inner
        let mut u = vec![Scalar::zero(); len];
        for (i, c) in inner.iter().enumerate().take(len - 1) {
            u[i + 1] = aj * c;
        }
        inner = exp_series(&u, len);
    }
    inner.resize(len, Scalar::zero());
    inner.iter().map(|c| &a[0] * c).collect()
}

/// Maclaurin coefficients `c_0..c_K` of the continued exponential. Missing
/// `a_j` are taken as zero.
pub fn continued_exponential(a: &[Scalar], k: usize) -> Result<CoefficientSequence> {
    let first = a.first().ok_or_else(|| Error::InvalidInput("empty coefficient list".into()))?;
    if first.is_zero() {
        return Err(Error::InvalidInput("a_0 must be nonzero".into()));
    }
    let mut padded = a.to_vec();
    padded.resize(padded.len().max(k + 1), Scalar::zero());
    Ok(CoefficientSequence::explicit(
        "continued-exponential",
        expand(&padded, k),
        SignConvention::AsIs,
    ))
}

/// Recover `a_0..a_K` from series coefficients, order by order. Once some
/// `a_j` vanishes the deeper layers are invisible and are returned as zero.
pub fn continued_exponential_match(c: &CoefficientSequence, k: usize) -> Result<Vec<Scalar>> {
    let c = c.signed_prefix(k + 1)?;
    if c[0].is_zero() {
        return Err(Error::InvalidInput("c_0 must be nonzero".into()));
    }
    let mut a = vec![Scalar::zero(); k + 1];
    a[0] = c[0].clone();
    let mut lead = a[0].clone();
    for n in 1..=k {
        let partial = expand(&a, n);
        let residual = &c[n] - &partial[n];
        if lead.is_zero() {
            if !residual.is_zero() {
                return Err(Error::DomainError(format!(
                    "coefficient c_{n} is not reachable by a continued exponential"
                )));
            }
            continue;
        }
        a[n] = &residual / &lead;
        lead = &lead * &a[n];
    }
    Ok(a)
}

/// Solve `w = exp(z w)` by fixed-point iteration (converges for `0 ≤ z < 1/e`).
pub fn self_exponential_fixed_point(z: f64) -> Result<f64> {
    let mut w: f64 = 1.0;
    for _ in 0..10_000 {
        let next = (z * w).exp();
        if (next - w).abs() < 1e-15 * next.abs() {
            return Ok(next);
        }
        w = next;
    }
    Err(Error::ConvergenceFailure(format!("w = exp({z} w) did not settle")))
}
