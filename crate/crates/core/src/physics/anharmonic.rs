//! Ground-state energy of `H = p²/2 + x²/2 + ε x⁴` as a power series in `ε`.

use crate::error::{Error, Result};
use crate::numerics::scalar::Scalar;
use crate::numerics::sequence::{CoefficientSequence, SignConvention};
use crate::numerics::special::gamma_half_integer_over_sqrt_pi;
use crate::pade::{staircase_evaluate, StaircaseEntry};

/// Default largest order [`anharmonic_coefficients`] will compute.
pub const DEFAULT_ORDER_LIMIT: usize = 25;

#[derive(Clone, Debug, PartialEq)]
pub struct PerturbationSeries {
    pub coeffs: Vec<Scalar>,
    /// `true` when the coefficients are those of `F(ε) = (E₀(ε) - E₀(0)) / ε`.
    pub subtracted: bool,
}

impl PerturbationSeries {
    /// `F(ε) = (E₀(ε) - 1/2) / ε`.
    pub fn subtracted(&self) -> PerturbationSeries {
        if self.subtracted {
            return self.clone();
        }
        PerturbationSeries {
            coeffs: self.coeffs.iter().skip(1).cloned().collect(),
            subtracted: true,
        }
    }

    pub fn to_sequence(&self) -> CoefficientSequence {
        let name = if self.subtracted { "anharmonic-F" } else { "anharmonic-E0" };
        CoefficientSequence::explicit(name, self.coeffs.clone(), SignConvention::AsIs)
    }
}

/// Rayleigh–Schrödinger coefficients of `E₀` through order `k`, capped at
/// [`DEFAULT_ORDER_LIMIT`].
pub fn anharmonic_coefficients(k: usize) -> Result<PerturbationSeries> {
    anharmonic_coefficients_with_limit(k, DEFAULT_ORDER_LIMIT)
}

/// As [`anharmonic_coefficients`] with an explicit order cap.
///
/// States are expanded in the unnormalized basis `|n) = (a†)^n |0⟩`, where
/// `a†|n) = |n+1)` and `a|n) = n|n-1)`, so `x⁴ = (a + a†)⁴ / 4` has rational
/// matrix elements and no square roots appear. With intermediate
/// normalization, `E_k = (V ψ_{k-1})_0` and for `n ≥ 1`
/// `n·ψ_{k,n} = -(V ψ_{k-1})_n + Σ_{j=1}^{k-1} E_j ψ_{k-j,n}`.
pub fn anharmonic_coefficients_with_limit(k: usize, limit: usize) -> Result<PerturbationSeries> {
    if k > limit {
        return Err(Error::ResourceLimit { requested: k, limit });
    }
    let mut energies = vec![Scalar::ratio(1, 2)];
    let mut states: Vec<Vec<Scalar>> = vec![vec![Scalar::one()]];
    let quarter = Scalar::ratio(1, 4);
    for order in 1..=k {
        let v_prev: Vec<Scalar> = apply_x4(&states[order - 1]).iter().map(|c| c * &quarter).collect();
        let e = v_prev[0].clone();
        let len = 4 * order + 1;
        let mut psi = vec![Scalar::zero(); len];
        for (n, slot) in psi.iter_mut().enumerate().skip(1) {
            let mut acc = -v_prev.get(n).cloned().unwrap_or_else(Scalar::zero);
            for j in 1..order {
                if let Some(c) = states[order - j].get(n) {
                    acc = &acc + &(&energies[j] * c);
                }
            }
            *slot = &acc / &Scalar::from_int(n as i64);
        }
        energies.push(e);
        states.push(psi);
    }
    Ok(PerturbationSeries {
        coeffs: energies,
        subtracted: false,
    })
}

/// `(a + a†)⁴ v` in the unnormalized basis.
fn apply_x4(v: &[Scalar]) -> Vec<Scalar> {
    let mut cur = v.to_vec();
    for _ in 0..4 {
        let mut next = vec![Scalar::zero(); cur.len() + 1];
        for (n, c) in cur.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            next[n + 1] = &next[n + 1] + c;
            if n > 0 {
                next[n - 1] = &next[n - 1] + &(c * &Scalar::from_int(n as i64));
            }
        }
        cur = next;
    }
    cur
}

/// Large-order estimate `(-1)^{n+1} √6 π^{-3/2} 3^n Γ(n + 1/2)` of the `n`-th
/// coefficient, evaluated with `digits` decimal digits.
pub fn anharmonic_asymptotic(n: usize, digits: u32) -> Scalar {
    // Γ(n + 1/2) π^{-3/2} = (Γ(n + 1/2)/√π) / π
    let gamma = Scalar::from_rational(gamma_half_integer_over_sqrt_pi(n as u64));
    let three_n = Scalar::from_bigint(num_traits::pow(num_bigint::BigInt::from(3), n));
    let sqrt6 = Scalar::from_int(6).sqrt(digits).expect("positive");
    let magnitude = &(&(&sqrt6 * &three_n) * &gamma) / &Scalar::pi(digits);
    if n % 2 == 1 {
        magnitude
    } else {
        -magnitude
    }
}

/// One row of the ground-state Padé table: `1/2 + [n-1/n](1)` and
/// `1/2 + [n/n](1)` of `F(ε)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PadeTableRow {
    pub n: usize,
    pub lower: StaircaseEntry,
    pub upper: StaircaseEntry,
}

/// Staircase Padé approximants of `F(ε)` at `ε = 1`, shifted by `1/2`, for
/// rows `n = 1..=depth`. Uses `E₀` coefficients through order `2·depth + 1`.
pub fn anharmonic_pade_table(depth: usize) -> Result<Vec<PadeTableRow>> {
    let series = anharmonic_coefficients(2 * depth + 1)?;
    pade_table_from(&series, depth)
}

/// [`anharmonic_pade_table`] from a caller-supplied coefficient prefix.
pub fn pade_table_from(series: &PerturbationSeries, depth: usize) -> Result<Vec<PadeTableRow>> {
    let f = series.subtracted().to_sequence();
    let entries = staircase_evaluate(&f, &Scalar::one(), depth)?;
    let half = Scalar::ratio(1, 2);
    let shift = |e: &StaircaseEntry| StaircaseEntry {
        label: e.label.clone(),
        orders: e.orders,
        value: &e.value + &half,
    };
    Ok((1..=depth)
        .map(|n| PadeTableRow {
            n,
            lower: shift(&entries[2 * n - 1]),
            upper: shift(&entries[2 * n]),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_orders() {
        let s = anharmonic_coefficients(4).unwrap();
        let expected = [(1, 2), (3, 4), (-21, 8), (333, 16), (-30885, 128)];
        for (c, (p, q)) in s.coeffs.iter().zip(expected) {
            assert_eq!(*c, Scalar::ratio(p, q));
        }
        assert_eq!(anharmonic_coefficients(0).unwrap().coeffs, vec![Scalar::ratio(1, 2)]);
        assert!(matches!(anharmonic_coefficients(26), Err(Error::ResourceLimit { .. })));
    }

    #[test]
    fn asymptotic_sign() {
        assert!(anharmonic_asymptotic(1, 30).is_positive());
        assert!(anharmonic_asymptotic(2, 30).is_negative());
    }

    #[test]
    fn asymptotic_matches_f64_formula() {
        // Γ(n + 1/2) by the upward recurrence from Γ(1/2) = √π
        let mut gamma = std::f64::consts::PI.sqrt();
        for n in 1..=12 {
            gamma *= n as f64 - 0.5;
            let expected = 6f64.sqrt() * std::f64::consts::PI.powf(-1.5) * 3f64.powi(n) * gamma;
            let got = anharmonic_asymptotic(n as usize, 30).abs().to_f64();
            assert!((got / expected - 1.0).abs() < 1e-13, "n = {n}");
        }
    }

    #[test]
    fn first_table_rows() {
        let rows = anharmonic_pade_table(1).unwrap();
        assert_eq!(rows[0].lower.value, Scalar::ratio(2, 3));
        assert_eq!(rows[0].lower.label, "P^0_1");
        assert_eq!(rows[0].upper.value.to_fixed(5), "0.95600");
    }
}
