//! The main Padé sequence `[0/0], [0/1], [1/1], [1/2], ...` evaluated as
//! convergents of the Stieltjes continued fraction.

use super::moments::{contfrac_to_moments, moments_to_contfrac, ContFracCoeffs, MomentSequence};
use crate::error::{Error, Result};
use crate::numerics::scalar::Scalar;
use crate::numerics::sequence::{CoefficientSequence, SignConvention};

#[derive(Clone, Debug, PartialEq)]
pub struct StaircaseEntry {
    pub label: String,
    /// Numerator and denominator degrees.
    pub orders: (usize, usize),
    pub value: Scalar,
}

/// Label `P^n_m` for the `[n/m]` approximant.
pub fn staircase_label(n: usize, m: usize) -> String {
    format!("P^{n}_{m}")
}

/// Moments `a_n = (-1)^n c_n` of a series `Σ c_n z^n`.
pub fn moments_of(seq: &CoefficientSequence, count: usize) -> Result<MomentSequence> {
    let a = match seq.sign_convention() {
        SignConvention::AlternatingImplied => seq.stored_prefix(count)?,
        SignConvention::AsIs => seq
            .stored_prefix(count)?
            .into_iter()
            .enumerate()
            .map(|(n, c)| if n % 2 == 1 { -c } else { c })
            .collect(),
    };
    Ok(MomentSequence::new(a))
}

/// Convergents `1..=2·depth+1` of `a_0 / (1 + b_1 z / (1 + b_2 z / ...))`
/// via `A_k = A_{k-1} + α_k A_{k-2}` with `α_1 = 1`, `α_k = b_{k-1} z`.
pub fn staircase_evaluate(seq: &CoefficientSequence, z: &Scalar, depth: usize) -> Result<Vec<StaircaseEntry>> {
    let count = 2 * depth + 1;
    let moments = moments_of(seq, count)?;
    let a0 = moments.a[0].clone();
    if a0.is_zero() {
        return Err(Error::DegenerateMoments("leading coefficient is zero".into()));
    }
    let normalized = moments.normalized()?;
    let b = if count >= 2 {
        moments_to_contfrac(&normalized)?
    } else {
        ContFracCoeffs::new(Vec::new())
    };
    if b.terminated {
        check_terminated_tail(&b, &normalized)?;
    }
    convergents(&b, z, count)
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            let k = i + 1;
            let (n, m) = ((k - 1) / 2, k / 2);
            let v = v.ok_or_else(|| {
                Error::DomainError(format!("[{n}/{m}] has a pole at z = {}", z.to_f64()))
            })?;
            Ok(StaircaseEntry {
                label: staircase_label(n, m),
                orders: (n, m),
                value: &a0 * &v,
            })
        })
        .collect()
}

/// The remaining moments of a terminated fraction must be those of the
/// finite fraction itself.
fn check_terminated_tail(b: &ContFracCoeffs, a: &MomentSequence) -> Result<()> {
    let k = a.len() - 1;
    let finite = ContFracCoeffs::new(b.b[..b.b.len() - 1].to_vec());
    let implied = contfrac_to_moments(&finite, k);
    if let Some(i) = (0..=k).find(|&i| implied.a[i] != a.a[i]) {
        return Err(Error::DegenerateMoments(format!(
            "fraction terminates after b_{} but moment a_{i} is inconsistent with it",
            b.b.len() - 1
        )));
    }
    Ok(())
}

/// Values of the first `count` convergents (without the `a_0` factor). Past a
/// zero coefficient the fraction has ended and the value is held. `None`
/// marks a convergent whose denominator vanishes at `z`.
pub fn convergents(b: &ContFracCoeffs, z: &Scalar, count: usize) -> Vec<Option<Scalar>> {
    let mut out = Vec::with_capacity(count);
    let (mut a_prev, mut a_cur) = (Scalar::one(), Scalar::zero());
    let (mut b_prev, mut b_cur) = (Scalar::zero(), Scalar::one());
    let mut ended = false;
    for k in 1..=count {
        if !ended {
            let alpha = if k == 1 {
                Scalar::one()
            } else {
                match b.b.get(k - 2) {
                    Some(bk) if !bk.is_zero() => bk * z,
                    _ => {
                        ended = true;
                        Scalar::zero()
                    }
                }
            };
            if !ended {
                let a_next = &a_cur + &(&alpha * &a_prev);
                let b_next = &b_cur + &(&alpha * &b_prev);
                a_prev = std::mem::replace(&mut a_cur, a_next);
                b_prev = std::mem::replace(&mut b_cur, b_next);
            }
        }
        out.push(a_cur.checked_div(&b_cur));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::scalar::factorial;

    fn factorial_series() -> CoefficientSequence {
        CoefficientSequence::from_fn("n!", SignConvention::AlternatingImplied, |n| {
            Scalar::from_bigint(factorial(n as u64))
        })
    }

    #[test]
    fn geometric_terminates_at_two_thirds() {
        let seq = CoefficientSequence::from_fn("g", SignConvention::AlternatingImplied, |_| Scalar::one());
        let stairs = staircase_evaluate(&seq, &Scalar::ratio(1, 2), 3).unwrap();
        assert_eq!(stairs.len(), 7);
        assert_eq!(stairs[0].value, Scalar::one());
        assert!(stairs[1..].iter().all(|e| e.value == Scalar::ratio(2, 3)));
        assert_eq!(stairs[2].label, "P^1_1");
    }

    #[test]
    fn factorial_brackets() {
        let stairs = staircase_evaluate(&factorial_series(), &Scalar::one(), 6).unwrap();
        let diag: Vec<f64> = stairs.iter().filter(|e| e.orders.0 == e.orders.1).map(|e| e.value.to_f64()).collect();
        let off: Vec<f64> = stairs.iter().filter(|e| e.orders.0 != e.orders.1).map(|e| e.value.to_f64()).collect();
        assert!(diag.windows(2).all(|w| w[1] < w[0]));
        assert!(off.windows(2).all(|w| w[1] > w[0]));
        assert!(off.last().unwrap() < diag.last().unwrap());
    }

    #[test]
    fn inconsistent_tail_is_rejected() {
        let seq = CoefficientSequence::explicit(
            "bad",
            vec![Scalar::one(), Scalar::one(), Scalar::one(), Scalar::from_int(2), Scalar::from_int(5)],
            SignConvention::AlternatingImplied,
        );
        assert!(matches!(
            staircase_evaluate(&seq, &Scalar::one(), 2),
            Err(Error::DegenerateMoments(_))
        ));
    }
}
