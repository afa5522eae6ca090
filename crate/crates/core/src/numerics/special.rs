use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::scalar::{binomial, factorial, Scalar};

/// Exact Bernoulli numbers `B_0..B_K` with `B_1 = -1/2`.
pub fn bernoulli_numbers(k: usize) -> Vec<Scalar> {
    let mut b: Vec<BigRational> = Vec::with_capacity(k + 1);
    b.push(BigRational::one());
    for m in 1..=k {
        let mut acc = BigRational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += BigRational::from_integer(binomial(m as u64 + 1, j as u64)) * bj;
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b.into_iter().map(Scalar::Exact).collect()
}

/// `Γ(n + 1/2) / √π = (2n)! / (4^n n!)`, exact.
pub fn gamma_half_integer_over_sqrt_pi(n: u64) -> BigRational {
    BigRational::new(
        factorial(2 * n),
        num_traits::pow(BigInt::from(4), n as usize) * factorial(n),
    )
}

/// Product of the odd integers up to `m` (`m!!` for odd `m`); `1` for `m < 1`.
pub fn odd_double_factorial(m: i64) -> BigInt {
    let mut acc = BigInt::one();
    let mut k = m;
    while k > 1 {
        acc *= BigInt::from(k);
        k -= 2;
    }
    acc
}
