//! Detection of rational generating functions via Berlekamp–Massey over the
//! exact rationals.

use crate::numerics::poly;
use crate::numerics::scalar::Scalar;

/// Terms beyond `2L` that a detected recurrence must also reproduce.
pub const VERIFY_MARGIN: usize = 4;

/// `Σ a_n x^n = num(x) / den(x)` with `den(0) = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalGf {
    pub num: Vec<Scalar>,
    pub den: Vec<Scalar>,
}

impl RationalGf {
    /// Remove common `(1 - x)` factors.
    pub fn cancel_at_one(&self) -> RationalGf {
        let (mut num, kn) = poly::deflate_at_one(&self.num);
        let (mut den, kd) = poly::deflate_at_one(&self.den);
        let common = kn.min(kd);
        // restore the factors that were not common
        let one_minus_x = [Scalar::one(), Scalar::from_int(-1)];
        for _ in common..kn {
            num = poly::mul(&num, &one_minus_x);
        }
        for _ in common..kd {
            den = poly::mul(&den, &one_minus_x);
        }
        RationalGf { num, den }
    }

    pub fn value_at_one(&self) -> Option<Scalar> {
        let d = poly::eval(&self.den, &Scalar::one());
        poly::eval(&self.num, &Scalar::one()).checked_div(&d)
    }

    /// Power-series coefficients of the generating function.
    pub fn expand(&self, len: usize) -> Vec<Scalar> {
        poly::series_div(&self.num, &self.den, len)
    }
}

/// Shortest linear recurrence `a_n + Σ_{i=1}^{L} c_i a_{n-i} = 0` (`n ≥ L`)
/// generating `terms`. Returns `(L, [1, c_1, .., c_L])`.
pub fn berlekamp_massey(terms: &[Scalar]) -> (usize, Vec<Scalar>) {
    let mut c = vec![Scalar::one()];
    let mut b = vec![Scalar::one()];
    let mut l = 0usize;
    let mut m = 1usize;
    let mut last = Scalar::one();
    for n in 0..terms.len() {
        let mut d = terms[n].clone();
        for i in 1..=l.min(c.len() - 1) {
            d = &d + &(&c[i] * &terms[n - i]);
        }
        if d.is_zero() {
            m += 1;
            continue;
        }
        let factor = &d / &last;
        let mut next = c.clone();
        if next.len() < b.len() + m {
            next.resize(b.len() + m, Scalar::zero());
        }
        for (i, bi) in b.iter().enumerate() {
            next[i + m] = &next[i + m] - &(&factor * bi);
        }
        if 2 * l <= n {
            b = c;
            l = n + 1 - l;
            last = d;
            m = 1;
        } else {
            m += 1;
        }
        c = next;
    }
    c.truncate(l + 1);
    (l, poly::trim(c))
}

/// Rational generating function of an exact prefix, accepted only when the
/// recurrence is over-determined by [`VERIFY_MARGIN`] extra terms.
pub fn detect_rational_gf(terms: &[Scalar]) -> Option<RationalGf> {
    if !terms.iter().all(Scalar::is_exact) {
        return None;
    }
    let (l, den) = berlekamp_massey(terms);
    if 2 * l + VERIFY_MARGIN > terms.len() {
        return None;
    }
    let num = poly::trim(poly::mul_trunc(terms, &den, l));
    Some(RationalGf { num, den })
}
