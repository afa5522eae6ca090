//! Built-in series, addressable by name from series files and the CLI.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::numerics::scalar::{binomial, factorial, Scalar};
use crate::numerics::sequence::{CoefficientSequence, Origin, SignConvention};
use crate::physics::anharmonic::{anharmonic_coefficients, DEFAULT_ORDER_LIMIT};
use crate::physics::quintic::{quintic_coefficients, QuinticVariant, MAX_ORDER};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
}

const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry { name: "log2", description: "1 - 1/2 + 1/3 - ... = ln 2" },
    CatalogEntry { name: "basel", description: "Σ 1/(n+1)² = π²/6" },
    CatalogEntry { name: "grandi", description: "1 - 1 + 1 - ..." },
    CatalogEntry { name: "ones", description: "1 + 1 + 1 + ..." },
    CatalogEntry { name: "doubling", description: "1 + 2 + 4 + 8 + ..." },
    CatalogEntry { name: "half-powers", description: "Σ (1/2)^n = 2" },
    CatalogEntry { name: "alternating-powers-<p>", description: "Σ (-1)^n (n+1)^p, e.g. alternating-powers-1 = 1 - 2 + 3 - ..." },
    CatalogEntry { name: "period3", description: "1 - 1 + 0 repeated" },
    CatalogEntry { name: "period5", description: "1 + 0 - 1 + 0 + 0 repeated" },
    CatalogEntry { name: "euler-factorial", description: "Σ (-1)^n n! z^n" },
    CatalogEntry { name: "factorial-2n-interleaved", description: "Σ (-1)^k (2k)! z^{2k}" },
    CatalogEntry { name: "euler-numbers", description: "moments 1, 1, 5, 61, 1385, ... (secant numbers)" },
    CatalogEntry { name: "anharmonic-E0", description: "ground-state energy 1/2 + 3/4 ε - 21/8 ε² + ... (26 terms)" },
    CatalogEntry { name: "anharmonic-F", description: "(E0(ε) - 1/2)/ε (25 terms)" },
    CatalogEntry { name: "quintic-regular", description: "root of x⁵ + εx - 1 = 0 near 1" },
    CatalogEntry { name: "quintic-singular", description: "root of εx⁵ + x - 1 = 0 near 1" },
];

pub fn entries() -> &'static [CatalogEntry] {
    ENTRIES
}

fn pow2(n: usize) -> Scalar {
    Scalar::from_bigint(num_traits::pow(BigInt::from(2), n))
}

/// Secant numbers from `Σ_{k=0}^{n} (-1)^k C(2n, 2k) S_k = 0`.
pub fn secant_numbers(count: usize) -> Vec<Scalar> {
    let mut s: Vec<BigInt> = Vec::with_capacity(count);
    for n in 0..count {
        if n == 0 {
            s.push(BigInt::from(1));
            continue;
        }
        let mut acc = BigInt::from(0);
        for (k, sk) in s.iter().enumerate() {
            let term = binomial(2 * n as u64, 2 * k as u64) * sk;
            if k % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        // (-1)^n S_n = -acc
        s.push(if n % 2 == 0 { -acc } else { acc });
    }
    s.into_iter().map(Scalar::from_bigint).collect()
}

pub fn lookup(name: &str) -> Result<CoefficientSequence> {
    use SignConvention::{AlternatingImplied as Alt, AsIs};
    let seq = match name {
        "log2" => CoefficientSequence::from_fn(name, Alt, |n| Scalar::ratio(1, n as i64 + 1)),
        "basel" => CoefficientSequence::from_fn(name, AsIs, |n| Scalar::ratio(1, (n as i64 + 1).pow(2))),
        "grandi" => CoefficientSequence::from_fn(name, Alt, |_| Scalar::one()),
        "ones" => CoefficientSequence::from_fn(name, AsIs, |_| Scalar::one()),
        "doubling" => CoefficientSequence::from_fn(name, AsIs, pow2),
        "half-powers" => CoefficientSequence::from_fn(name, AsIs, |n| pow2(n).recip()),
        "period3" => CoefficientSequence::from_fn(name, AsIs, |n| Scalar::from_int([1, -1, 0][n % 3])),
        "period5" => CoefficientSequence::from_fn(name, AsIs, |n| Scalar::from_int([1, 0, -1, 0, 0][n % 5])),
        "euler-factorial" => CoefficientSequence::from_fn(name, Alt, |n| Scalar::from_bigint(factorial(n as u64))),
        "factorial-2n-interleaved" => CoefficientSequence::from_fn(name, AsIs, |n| {
            if n % 2 == 1 {
                Scalar::zero()
            } else {
                let v = Scalar::from_bigint(factorial(n as u64));
                if n % 4 == 2 {
                    -v
                } else {
                    v
                }
            }
        }),
        "euler-numbers" => CoefficientSequence::generated(name, Alt, None, |count| Ok(secant_numbers(count))),
        "anharmonic-E0" => CoefficientSequence::generated(name, AsIs, Some(DEFAULT_ORDER_LIMIT + 1), |count| {
            Ok(anharmonic_coefficients(count.saturating_sub(1))?.coeffs)
        }),
        "anharmonic-F" => CoefficientSequence::generated(name, AsIs, Some(DEFAULT_ORDER_LIMIT), |count| {
            Ok(anharmonic_coefficients(count)?.subtracted().coeffs)
        }),
        "quintic-regular" => CoefficientSequence::generated(name, AsIs, Some(MAX_ORDER + 1), |count| {
            quintic_coefficients(QuinticVariant::Regular, count.saturating_sub(1))
        }),
        "quintic-singular" => CoefficientSequence::generated(name, AsIs, Some(MAX_ORDER + 1), |count| {
            quintic_coefficients(QuinticVariant::Singular, count.saturating_sub(1))
        }),
        _ => {
            let p = name
                .strip_prefix("alternating-powers-")
                .and_then(|p| p.parse::<u32>().ok())
                .ok_or_else(|| Error::InvalidInput(format!("unknown catalog series '{name}'")))?;
            CoefficientSequence::from_fn(name, Alt, move |n| {
                Scalar::from_bigint(num_traits::pow(BigInt::from(n + 1), p as usize))
            })
        }
    };
    Ok(seq.with_origin(Origin::Catalog(name.into())))
}
