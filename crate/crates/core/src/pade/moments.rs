//! Moment sequences and their Stieltjes continued-fraction coefficients.
//!
//! For moments `a_k = L[x^{2k}]` of an even functional, the monic orthogonal
//! polynomials obey `P_{n+1} = x P_n - b_n P_{n-1}` with
//! `b_n = L[P_n²] / L[P_{n-1}²]`, and
//! `Σ (-1)^n a_n z^n = a_0 / (1 + b_1 z / (1 + b_2 z / (1 + ...)))`.

use crate::error::{Error, Result};
use crate::numerics::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct MomentSequence {
    pub a: Vec<Scalar>,
}

impl MomentSequence {
    pub fn new(a: Vec<Scalar>) -> Self {
        Self { a }
    }

    /// Divide through by `a_0` so that `a_0 = 1`.
    pub fn normalized(&self) -> Result<Self> {
        let a0 = self
            .a
            .first()
            .ok_or_else(|| Error::InvalidInput("empty moment sequence".into()))?;
        if a0.is_zero() {
            return Err(Error::DegenerateMoments("a_0 = 0".into()));
        }
        Ok(Self {
            a: self.a.iter().map(|v| v / a0).collect(),
        })
    }

    /// Construct a Stieltjes candidate, rejecting non-positive moments.
    pub fn stieltjes_candidate(a: Vec<Scalar>) -> Result<Self> {
        if let Some(k) = a.iter().position(|v| !v.is_positive()) {
            return Err(Error::InvalidInput(format!("moment a_{k} is not positive")));
        }
        Ok(Self { a })
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ContFracCoeffs {
    /// `b_1, b_2, ...`
    pub b: Vec<Scalar>,
    /// Set when some `L[P_n²]` vanished; the last stored `b` is then zero
    /// and the fraction ends there.
    pub terminated: bool,
}

impl ContFracCoeffs {
    pub fn new(b: Vec<Scalar>) -> Self {
        let terminated = b.last().is_some_and(Scalar::is_zero);
        Self { b, terminated }
    }

    pub fn all_positive(&self) -> bool {
        self.b.iter().all(Scalar::is_positive)
    }
}

/// Monic orthogonal polynomials `P_0..P_K`, coefficients lowest degree first.
#[derive(Clone, Debug, PartialEq)]
pub struct OrthogonalPolySet {
    pub polys: Vec<Vec<Scalar>>,
}

impl OrthogonalPolySet {
    /// `P_0..P_{len(b)}` from the recurrence.
    pub fn from_contfrac(b: &[Scalar]) -> Self {
        let mut polys = vec![vec![Scalar::one()], vec![Scalar::zero(), Scalar::one()]];
        for n in 1..b.len() {
            let bn = &b[n - 1];
            let pn = &polys[n];
            let pm = &polys[n - 1];
            let mut next = vec![Scalar::zero(); pn.len() + 1];
            for (i, c) in pn.iter().enumerate() {
                next[i + 1] = c.clone();
            }
            for (i, c) in pm.iter().enumerate() {
                next[i] = &next[i] - &(bn * c);
            }
            polys.push(next);
        }
        polys.truncate(b.len().max(1) + 1);
        Self { polys }
    }
}

/// `L[p]` for the even functional with `L[x^{2k}] = a_k`.
fn functional(p: &[Scalar], a: &[Scalar]) -> Result<Scalar> {
    let mut acc = Scalar::zero();
    for (i, c) in p.iter().enumerate() {
        if i % 2 == 1 || c.is_zero() {
            continue;
        }
        let moment = a.get(i / 2).ok_or(Error::InsufficientTerms {
            needed: i / 2 + 1,
            available: a.len(),
        })?;
        acc = &acc + &(c * moment);
    }
    Ok(acc)
}

fn square(p: &[Scalar]) -> Vec<Scalar> {
    crate::numerics::poly::mul(p, p)
}

/// `b_1..b_{len-1}` from `a_0..a_{len-1}`. A vanishing `L[P_n²]` ends the
/// fraction early with `b_n = 0` and `terminated` set.
pub fn moments_to_contfrac(a: &MomentSequence) -> Result<ContFracCoeffs> {
    if a.len() < 2 {
        return Err(Error::InsufficientTerms {
            needed: 2,
            available: a.len(),
        });
    }
    if a.a[0].is_zero() {
        return Err(Error::DegenerateMoments("a_0 = 0".into()));
    }
    let mut b = Vec::with_capacity(a.len() - 1);
    let mut prev = vec![Scalar::one()];
    let mut cur = vec![Scalar::zero(), Scalar::one()];
    let mut norm_prev = a.a[0].clone();
    for _ in 1..a.len() {
        let norm = functional(&square(&cur), &a.a)?;
        let bn = &norm / &norm_prev;
        if norm.is_zero() {
            b.push(bn);
            return Ok(ContFracCoeffs { b, terminated: true });
        }
        let mut next = vec![Scalar::zero(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] = c.clone();
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] = &next[i] - &(&bn * c);
        }
        b.push(bn);
        prev = cur;
        cur = next;
        norm_prev = norm;
    }
    Ok(ContFracCoeffs { b, terminated: false })
}

/// `a_0..a_K` (with `a_0 = 1`) as weighted Dyck-path sums: an up-step to
/// height `h` carries weight `b_h`.
pub fn contfrac_to_moments(b: &ContFracCoeffs, k: usize) -> MomentSequence {
    let max_height = k.min(b.b.len());
    let mut paths = vec![Scalar::zero(); max_height + 2];
    paths[0] = Scalar::one();
    let mut a = vec![Scalar::one()];
    for step in 0..2 * k {
        let mut next = vec![Scalar::zero(); max_height + 2];
        for h in 0..=max_height {
            if paths[h].is_zero() {
                continue;
            }
            if h < max_height {
                next[h + 1] = &next[h + 1] + &(&paths[h] * &b.b[h]);
            }
            if h > 0 {
                next[h - 1] = &next[h - 1] + &paths[h];
            }
        }
        paths = next;
        if step % 2 == 1 {
            a.push(paths[0].clone());
        }
    }
    MomentSequence { a }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&k| Scalar::from_int(k)).collect()
    }

    #[test]
    fn euler_numbers() {
        let b = moments_to_contfrac(&MomentSequence::new(ints(&[1, 1, 5, 61]))).unwrap();
        assert_eq!(b.b, ints(&[1, 4, 9]));
        assert!(!b.terminated);
        let a = contfrac_to_moments(&ContFracCoeffs::new(ints(&[1, 4, 9, 16])), 4);
        assert_eq!(a.a, ints(&[1, 1, 5, 61, 1385]));
    }

    #[test]
    fn factorial_moments() {
        let b = moments_to_contfrac(&MomentSequence::new(ints(&[1, 1, 2, 6]))).unwrap();
        assert_eq!(b.b, ints(&[1, 1, 2]));
        let a = contfrac_to_moments(&ContFracCoeffs::new(ints(&[1, 1, 2, 2])), 4);
        assert_eq!(a.a, ints(&[1, 1, 2, 6, 24]));
    }

    #[test]
    fn geometric_moments_terminate() {
        let b = moments_to_contfrac(&MomentSequence::new(ints(&[1, 1, 1, 1]))).unwrap();
        assert_eq!(b.b, ints(&[1, 0]));
        assert!(b.terminated);
    }

    #[test]
    fn single_b() {
        let a = contfrac_to_moments(&ContFracCoeffs::new(vec![Scalar::ratio(7, 3)]), 1);
        assert_eq!(a.a, vec![Scalar::one(), Scalar::ratio(7, 3)]);
    }

    #[test]
    fn forward_relations() {
        let b = [Scalar::ratio(1, 2), Scalar::ratio(3, 5), Scalar::ratio(2, 7)];
        let a = contfrac_to_moments(&ContFracCoeffs::new(b.to_vec()), 3).a;
        let s = &b[0] + &b[1];
        assert_eq!(a[1], b[0]);
        assert_eq!(a[2], &b[0] * &s);
        assert_eq!(a[3], &b[0] * &(&(&s * &s) + &(&b[1] * &b[2])));
    }

    #[test]
    fn polynomials_are_monic_with_parity() {
        let set = OrthogonalPolySet::from_contfrac(&ints(&[1, 4, 9, 16]));
        assert_eq!(set.polys.len(), 5);
        for (n, p) in set.polys.iter().enumerate() {
            assert_eq!(p.len(), n + 1);
            assert_eq!(p[n], Scalar::one());
            for (i, c) in p.iter().enumerate() {
                if (n + i) % 2 == 1 {
                    assert!(c.is_zero());
                }
            }
        }
    }
}
