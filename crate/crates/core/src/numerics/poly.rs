//! Dense polynomials and truncated power series as coefficient vectors,
//! lowest degree first.

use num_complex::Complex64;

use super::scalar::Scalar;

pub fn eval(p: &[Scalar], x: &Scalar) -> Scalar {
    p.iter().rev().fold(Scalar::zero(), |acc, c| &(&acc * x) + c)
}

pub fn eval_f64(p: &[f64], x: f64) -> f64 {
    p.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

pub fn eval_complex(p: &[f64], z: Complex64) -> Complex64 {
    p.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

pub fn to_f64(p: &[Scalar]) -> Vec<f64> {
    p.iter().map(Scalar::to_f64).collect()
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x + y,
            (Some(x), None) | (None, Some(x)) => x.clone(),
            (None, None) => unreachable!(),
        })
        .collect()
}

pub fn scale(a: &[Scalar], k: &Scalar) -> Vec<Scalar> {
    a.iter().map(|c| c * k).collect()
}

pub fn mul(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Scalar::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

/// Product truncated to the first `len` coefficients.
pub fn mul_trunc(a: &[Scalar], b: &[Scalar], len: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

pub fn derivative(p: &[Scalar]) -> Vec<Scalar> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * &Scalar::from_int(k as i64))
        .collect()
}

/// Drop trailing zero coefficients.
pub fn trim(mut p: Vec<Scalar>) -> Vec<Scalar> {
    while p.last().is_some_and(Scalar::is_zero) {
        p.pop();
    }
    p
}

/// First `len` coefficients of the power series `num / den`. Requires
/// `den[0] != 0`.
pub fn series_div(num: &[Scalar], den: &[Scalar], len: usize) -> Vec<Scalar> {
    assert!(!den.is_empty() && !den[0].is_zero(), "series division by a series with zero constant term");
    let mut out: Vec<Scalar> = Vec::with_capacity(len);
    for k in 0..len {
        let mut acc = num.get(k).cloned().unwrap_or_else(Scalar::zero);
        for j in 1..=k.min(den.len() - 1) {
            acc = &acc - &(&den[j] * &out[k - j]);
        }
        out.push(&acc / &den[0]);
    }
    out
}

/// Divide `p` by `(1 - x)` as many times as it vanishes at 1, returning the
/// quotient and the multiplicity.
pub fn deflate_at_one(p: &[Scalar]) -> (Vec<Scalar>, usize) {
    let mut p = trim(p.to_vec());
    let mut count = 0;
    while !p.is_empty() && eval(&p, &Scalar::one()).is_zero() {
        // synthetic division by (x - 1), then negate for (1 - x)
        let n = p.len() - 1;
        let mut q = vec![Scalar::zero(); n];
        let mut carry = Scalar::zero();
        for k in (0..n).rev() {
            carry = &carry + &p[k + 1];
            q[k] = carry.clone();
        }
        p = trim(q.into_iter().map(|c| -c).collect());
        count += 1;
    }
    (p, count)
}

/// Quotient and remainder of exact polynomial division. Panics if `b` is zero.
pub fn div_rem(a: &[Scalar], b: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead = b.last().unwrap();
    let mut q = vec![Scalar::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let factor = r.last().unwrap() / lead;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &(&factor * c);
        }
        q[shift] = factor;
        r.pop();
        r = trim(r);
    }
    (trim(q), r)
}

/// Monic greatest common divisor.
pub fn gcd(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let (_, r) = div_rem(&a, &b);
        a = b;
        b = r;
    }
    match a.last().cloned() {
        Some(lead) => a.iter().map(|c| c / &lead).collect(),
        None => a,
    }
}

/// `p / gcd(p, p')`: the same zeros, each simple.
pub fn squarefree(p: &[Scalar]) -> Vec<Scalar> {
    let g = gcd(p, &derivative(p));
    if g.len() <= 1 {
        return trim(p.to_vec());
    }
    div_rem(p, &g).0
}

/// All complex roots of a real polynomial (Aberth–Ehrlich iteration).
pub fn roots(p: &[f64]) -> Vec<Complex64> {
    let mut p: Vec<f64> = p.to_vec();
    while p.last().is_some_and(|c| *c == 0.0) {
        p.pop();
    }
    let degree = p.len().saturating_sub(1);
    if degree == 0 {
        return Vec::new();
    }
    let lead = p[degree];
    let monic: Vec<f64> = p.iter().map(|c| c / lead).collect();
    let dmonic: Vec<f64> = monic.iter().enumerate().skip(1).map(|(k, c)| c * k as f64).collect();
    let radius = 1.0 + monic[..degree].iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut z: Vec<Complex64> = (0..degree)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / degree as f64 + 0.4;
            Complex64::from_polar(0.5 * radius, angle)
        })
        .collect();
    for _ in 0..500 {
        let mut largest: f64 = 0.0;
        for k in 0..degree {
            let pv = eval_complex(&monic, z[k]);
            if pv.norm() == 0.0 {
                continue;
            }
            let ratio = pv / eval_complex(&dmonic, z[k]);
            let repulsion: Complex64 = (0..degree)
                .filter(|&j| j != k)
                .map(|j| (z[k] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                largest = largest.max(step.norm() / z[k].norm().max(1e-300));
            }
        }
        if largest < 1e-15 {
            break;
        }
    }
    z
}
