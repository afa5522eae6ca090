use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::linalg;
use crate::numerics::poly;
use crate::numerics::scalar::Scalar;
use crate::numerics::sequence::CoefficientSequence;

/// `num(z) / den(z)` with `den(0) = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct PadeRational {
    pub num: Vec<Scalar>,
    pub den: Vec<Scalar>,
    pub orders: (usize, usize),
}

impl PadeRational {
    pub fn new(num: Vec<Scalar>, den: Vec<Scalar>) -> Result<Self> {
        if den.first().is_none_or(|d| *d != Scalar::one()) {
            return Err(Error::InvalidInput("denominator must have constant term 1".into()));
        }
        let orders = (num.len().saturating_sub(1), den.len() - 1);
        Ok(Self { num, den, orders })
    }

    /// `None` at a zero of the denominator.
    pub fn eval(&self, z: &Scalar) -> Option<Scalar> {
        poly::eval(&self.num, z).checked_div(&poly::eval(&self.den, z))
    }

    pub fn eval_f64(&self, z: f64) -> f64 {
        poly::eval_f64(&poly::to_f64(&self.num), z) / poly::eval_f64(&poly::to_f64(&self.den), z)
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        poly::eval_complex(&poly::to_f64(&self.num), z) / poly::eval_complex(&poly::to_f64(&self.den), z)
    }

    /// Maclaurin coefficients of `num/den`.
    pub fn expand(&self, len: usize) -> Vec<Scalar> {
        poly::series_div(&self.num, &self.den, len)
    }

    /// Complex zeros of the denominator.
    pub fn poles(&self) -> Vec<Complex64> {
        poly::roots(&poly::to_f64(&self.den))
    }
}

/// `[n/m]` Padé approximant from signed coefficients `c_0..c_{n+m}`.
pub fn pade_from_coeffs(c: &[Scalar], n: usize, m: usize) -> Result<PadeRational> {
    let needed = n + m + 1;
    if c.len() < needed {
        return Err(Error::InsufficientTerms {
            needed,
            available: c.len(),
        });
    }
    let coeff = |k: isize| -> Scalar {
        if k < 0 {
            Scalar::zero()
        } else {
            c[k as usize].clone()
        }
    };
    let mut den = vec![Scalar::one()];
    if m > 0 {
        let matrix: Vec<Vec<Scalar>> = (0..m)
            .map(|i| (1..=m).map(|j| coeff((n + 1 + i) as isize - j as isize)).collect())
            .collect();
        let rhs: Vec<Scalar> = (0..m).map(|i| -coeff((n + 1 + i) as isize)).collect();
        let q = linalg::solve(matrix, rhs).ok_or(Error::SingularSystem { n, m })?;
        den.extend(q);
    }
    let num: Vec<Scalar> = (0..=n)
        .map(|i| {
            (0..=i.min(m))
                .map(|j| &den[j] * &c[i - j])
                .fold(Scalar::zero(), |acc, t| &acc + &t)
        })
        .collect();
    let pade = PadeRational {
        num,
        den,
        orders: (n, m),
    };
    let expansion = pade.expand(needed);
    let exact = c[..needed].iter().all(Scalar::is_exact);
    let matches = expansion.iter().zip(&c[..needed]).all(|(x, y)| {
        if exact {
            x == y
        } else {
            (x - y).to_f64().abs() <= 1e-20_f64.max(1e-12 * y.to_f64().abs())
        }
    });
    if !matches {
        return Err(Error::SingularSystem { n, m });
    }
    Ok(pade)
}

/// `[n/m]` approximant of a coefficient sequence (sign convention applied).
pub fn pade_approximant(seq: &CoefficientSequence, n: usize, m: usize) -> Result<PadeRational> {
    let c = seq.signed_prefix(n + m + 1)?;
    pade_from_coeffs(&c, n, m)
}
