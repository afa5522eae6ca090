//! Two ways of inserting a small parameter into `x⁵ + x - 1 = 0`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::poly;
use crate::numerics::scalar::{binomial, Scalar};
use crate::numerics::sequence::{CoefficientSequence, SignConvention};
use crate::pade::{staircase_evaluate, StaircaseEntry};

/// Largest series order the study will compute.
pub const MAX_ORDER: usize = 400;
/// Deepest staircase row used for the singular series.
pub const MAX_STAIRCASE_DEPTH: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuinticVariant {
    /// `x⁵ + εx - 1 = 0`
    Regular,
    /// `εx⁵ + x - 1 = 0`
    Singular,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuinticReport {
    pub variant: QuinticVariant,
    /// `a_0..a_K` of `x(ε) = Σ a_k ε^k` for the root that tends to 1.
    pub coeffs: Vec<Scalar>,
    /// Radius of convergence of that series.
    pub radius: Scalar,
    /// `Σ_{k≤K} a_k ε^k`.
    pub partial_sum: Scalar,
    /// Real root of the perturbed equation at `ε`, by bisection.
    pub reference_root: f64,
    pub singular: Option<SingularDetails>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SingularDetails {
    /// Coefficients of `s(δ)`, the root of `s⁵ + s - δ = 0` near 0, with
    /// `δ = ε^{1/4}` and `x = s/δ`.
    pub delta_series: Vec<Scalar>,
    /// `ε^{1/4}·z` for the four roots that leave to infinity as `ε → 0`;
    /// each tends to a fourth root of `-1`.
    pub runaway_scaled: Vec<Complex64>,
    /// Staircase Padé values of the `ε`-series at `ε`.
    pub staircase: Vec<StaircaseEntry>,
}

impl SingularDetails {
    pub fn pade_value(&self) -> Option<&Scalar> {
        self.staircase.last().map(|e| &e.value)
    }
}

/// Series coefficients `a_0..a_K` by order-by-order substitution. Powers of
/// the series come from the Miller recurrence for `p = x⁵`,
/// `p_k = (1/k) Σ_{j=1}^{k} (6j - k) a_j p_{k-j}`.
pub fn quintic_coefficients(variant: QuinticVariant, k: usize) -> Result<Vec<Scalar>> {
    if k > MAX_ORDER {
        return Err(Error::ResourceLimit {
            requested: k,
            limit: MAX_ORDER,
        });
    }
    let mut a = vec![Scalar::one()];
    let mut p = vec![Scalar::one()];
    for order in 1..=k {
        // all of p_order except its 5·a_order term
        let rest = (1..order)
            .map(|j| &(&Scalar::from_int(6 * j as i64 - order as i64) * &a[j]) * &p[order - j])
            .fold(Scalar::zero(), |acc, t| &acc + &t)
            / Scalar::from_int(order as i64);
        let next = match variant {
            // p_k = -a_{k-1}
            QuinticVariant::Regular => &(&-a[order - 1].clone() - &rest) / &Scalar::from_int(5),
            // a_k = -p_{k-1}
            QuinticVariant::Singular => -p[order - 1].clone(),
        };
        p.push(&(&Scalar::from_int(5) * &next) + &rest);
        a.push(next);
    }
    Ok(a)
}

/// `(5/4)^{4/5}` for the regular series, `4⁴/5⁵` for the singular one.
pub fn quintic_radius(variant: QuinticVariant, digits: u32) -> Scalar {
    match variant {
        QuinticVariant::Regular => {
            let ln = Scalar::ratio(5, 4).ln(digits).expect("positive");
            (&ln * &Scalar::ratio(4, 5)).exp(digits)
        }
        QuinticVariant::Singular => Scalar::ratio(256, 3125),
    }
}

/// Real root in `(0, 1]` of the perturbed equation, by bisection to `1e-13`.
pub fn quintic_bisection(variant: QuinticVariant, eps: f64) -> f64 {
    let f = |x: f64| match variant {
        QuinticVariant::Regular => x.powi(5) + eps * x - 1.0,
        QuinticVariant::Singular => eps * x.powi(5) + x - 1.0,
    };
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    while hi - lo > 1e-13 {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

pub fn quintic_root_study(variant: QuinticVariant, k: usize, eps: &Scalar, digits: u32) -> Result<QuinticReport> {
    if k == 0 {
        return Err(Error::InvalidInput("series order must be at least 1".into()));
    }
    if !eps.is_positive() || *eps > Scalar::one() {
        return Err(Error::DomainError("eps must lie in (0, 1]".into()));
    }
    let coeffs = quintic_coefficients(variant, k)?;
    let partial_sum = poly::eval(&coeffs, eps);
    let reference_root = quintic_bisection(variant, eps.to_f64());
    let singular = match variant {
        QuinticVariant::Regular => None,
        QuinticVariant::Singular => Some(singular_details(&coeffs, eps)?),
    };
    Ok(QuinticReport {
        variant,
        radius: quintic_radius(variant, digits),
        coeffs,
        partial_sum,
        reference_root,
        singular,
    })
}

fn singular_details(coeffs: &[Scalar], eps: &Scalar) -> Result<SingularDetails> {
    let mut delta_series = vec![Scalar::zero(); 4 * (coeffs.len() - 1) + 2];
    for (j, c) in coeffs.iter().enumerate() {
        delta_series[4 * j + 1] = c.clone();
    }
    let e = eps.to_f64();
    let scale = e.powf(0.25);
    let mut roots = poly::roots(&[-1.0, 1.0, 0.0, 0.0, 0.0, e]);
    roots.sort_by(|x, y| y.norm().total_cmp(&x.norm()));
    let runaway_scaled = roots.iter().take(4).map(|z| z * scale).collect();

    let depth = ((coeffs.len() - 1) / 2).min(MAX_STAIRCASE_DEPTH);
    let seq = CoefficientSequence::explicit("quintic-singular", coeffs.to_vec(), SignConvention::AsIs);
    let staircase = staircase_evaluate(&seq, eps, depth)?;
    Ok(SingularDetails {
        delta_series,
        runaway_scaled,
        staircase,
    })
}

/// Closed form `a_k = (-1)^k C(5k, k) / (4k + 1)` of the singular series.
pub fn singular_coefficient(k: usize) -> Scalar {
    let c = Scalar::from_bigint(binomial(5 * k as u64, k as u64)) / Scalar::from_int(4 * k as i64 + 1);
    if k % 2 == 1 {
        -c
    } else {
        c
    }
}
