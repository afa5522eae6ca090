//! Values forced by finite additivity, linearity and the shift rule
//! `S(a_0, a_1, ...) = a_0 + S(a_1, ...)`.

use super::recurrence::{detect_rational_gf, RationalGf};
use super::{Method, SummationResult};
use crate::error::{Error, Result};
use crate::numerics::scalar::Scalar;
use crate::numerics::sequence::CoefficientSequence;

/// Terms inspected when looking for a linear recurrence.
pub const RECURRENCE_WINDOW: usize = 64;

/// Sum of the endlessly repeated `pattern`. Adding the `p` shifted copies of
/// the series gives `p·s = Σ_k prefix_k`, which is only consistent when the
/// block sum vanishes.
pub fn generic_sum_periodic(pattern: &[Scalar]) -> Result<Scalar> {
    if pattern.is_empty() {
        return Err(Error::InvalidInput("empty pattern".into()));
    }
    let block: Scalar = pattern.iter().sum();
    if !block.is_zero() {
        return Err(Error::InconsistentSummation(format!(
            "pattern sums to {block} per period, so s = {block} + s has no solution"
        )));
    }
    let mut prefix = Scalar::zero();
    let mut total = Scalar::zero();
    for a in pattern {
        total = &total + &prefix;
        prefix = &prefix + a;
    }
    Ok(&total / &Scalar::from_int(pattern.len() as i64))
}

/// `first + first·r + first·r² + ...` from `s = first + r·s`.
pub fn geometric_sum(first: &Scalar, ratio: &Scalar) -> Result<Scalar> {
    let denom = &Scalar::one() - ratio;
    first.checked_div(&denom).ok_or_else(|| {
        Error::InconsistentSummation("ratio 1 gives s = first + s".into())
    })
}

/// Generic value of a series whose terms satisfy a linear recurrence: from
/// `Q(x)·A(x) = P(x)` and the axioms, `Q(1)·s = P(1)`. Finite explicit
/// sequences are summed directly.
pub fn generic_sum(seq: &CoefficientSequence) -> Result<SummationResult> {
    if !seq.is_extendable() {
        let terms = seq.signed_prefix(seq.stored_len())?;
        let value: Scalar = terms.iter().sum();
        return Ok(SummationResult::exact(value, Method::Direct, "finite series"));
    }
    let window = seq.capacity().map_or(RECURRENCE_WINDOW, |c| c.min(RECURRENCE_WINDOW));
    let terms = seq.signed_prefix(window)?;
    let gf = detect_rational_gf(&terms).ok_or_else(|| {
        Error::InvalidInput(format!(
            "no linear recurrence found in the first {window} terms of '{}'",
            seq.name()
        ))
    })?;
    sum_rational(&gf)
}

pub(crate) fn sum_rational(gf: &RationalGf) -> Result<SummationResult> {
    let value = gf.value_at_one().ok_or_else(|| {
        Error::InconsistentSummation("the recurrence polynomial vanishes at 1".into())
    })?;
    Ok(SummationResult::exact(
        value,
        Method::Generic,
        format!("linear recurrence of order {}", gf.den.len().saturating_sub(1)),
    ))
}
