//! Convergence acceleration of partial-sum sequences.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::numerics::scalar::{binomial, factorial, Scalar};
use crate::numerics::sequence::PartialSums;

#[derive(Clone, Debug, PartialEq)]
pub struct AccelRow {
    pub label: String,
    /// `None` marks an entry whose defining denominator vanished.
    pub values: Vec<Option<Scalar>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AccelTable {
    pub rows: Vec<AccelRow>,
    pub source: PartialSums,
}

impl AccelTable {
    /// The last defined entry of the last row.
    pub fn best(&self) -> Option<&Scalar> {
        self.rows.last()?.values.iter().rev().find_map(Option::as_ref)
    }
}

/// One Shanks step on three consecutive terms; `None` when the second
/// difference vanishes.
pub fn shanks_entry(prev: &Scalar, cur: &Scalar, next: &Scalar) -> Option<Scalar> {
    let two = Scalar::from_int(2);
    let den = &(next - &(&two * cur)) + prev;
    let num = &(next * prev) - &(cur * cur);
    num.checked_div(&den)
}

/// Iterated Shanks transformation. Row `j` holds the transform applied `j`
/// times; row 0 is the input.
pub fn shanks(sums: &PartialSums, iterations: usize) -> Result<AccelTable> {
    if iterations == 0 {
        return Err(Error::InvalidInput("Shanks needs at least one iteration".into()));
    }
    let needed = 2 * iterations + 1;
    if sums.len() < needed {
        return Err(Error::InsufficientTerms {
            needed,
            available: sums.len(),
        });
    }
    let mut rows = vec![AccelRow {
        label: "A".into(),
        values: sums.values.iter().cloned().map(Some).collect(),
    }];
    for j in 1..=iterations {
        let prev = &rows[j - 1].values;
        let values: Vec<Option<Scalar>> = prev
            .windows(3)
            .map(|w| match (&w[0], &w[1], &w[2]) {
                (Some(a), Some(b), Some(c)) => shanks_entry(a, b, c),
                _ => None,
            })
            .collect();
        if values.iter().all(Option::is_none) {
            return Err(Error::DegenerateDenominator { row: j });
        }
        rows.push(AccelRow {
            label: format!("S{j}"),
            values,
        });
    }
    Ok(AccelTable {
        rows,
        source: sums.clone(),
    })
}

/// Richardson extrapolation of order `k` started at `A_N`:
/// `(1/k!) Σ_{l=0}^{k} (-1)^{k-l} (N+l)^k C(k,l) A_{N+l}`.
pub fn richardson(sums: &PartialSums, order: usize, n_start: usize) -> Result<Scalar> {
    if order == 0 {
        return Err(Error::InvalidInput("Richardson order must be at least 1".into()));
    }
    let needed = n_start + order + 1;
    if sums.len() < needed {
        return Err(Error::InsufficientTerms {
            needed,
            available: sums.len(),
        });
    }
    let k = order as u64;
    let mut acc = Scalar::zero();
    for l in 0..=k {
        let base = BigInt::from(n_start as u64 + l);
        let weight = num_traits::pow(base, order) * binomial(k, l);
        let term = &Scalar::from_bigint(weight) * &sums.values[n_start + l as usize];
        acc = if (k - l).is_multiple_of(2) { &acc + &term } else { &acc - &term };
    }
    Ok(&acc / &Scalar::from_bigint(factorial(k)))
}

/// Richardson of order `k` at every admissible start index `N = 0..`.
pub fn richardson_table(sums: &PartialSums, order: usize) -> Result<AccelTable> {
    let available = sums.len();
    if available < order + 1 {
        return Err(Error::InsufficientTerms {
            needed: order + 1,
            available,
        });
    }
    let values = (0..available - order)
        .map(|n| richardson(sums, order, n).map(Some))
        .collect::<Result<Vec<_>>>()?;
    Ok(AccelTable {
        rows: vec![
            AccelRow {
                label: "A".into(),
                values: sums.values.iter().cloned().map(Some).collect(),
            },
            AccelRow {
                label: format!("R{order}"),
                values,
            },
        ],
        source: sums.clone(),
    })
}
