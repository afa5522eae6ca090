use num_bigint::BigInt;
use num_rational::BigRational;

use crate::numerics::scalar::{factorial, Scalar};
use crate::numerics::special::odd_double_factorial;

/// Weighted number of order-`n` vacuum diagrams of the `x⁴/4!` vertex,
/// `N(n) = (4n-1)!! / (n! (4!)^n)`.
pub fn diagram_count(n: usize) -> Scalar {
    let num = odd_double_factorial(4 * n as i64 - 1);
    let den = factorial(n as u64) * num_traits::pow(BigInt::from(24), n);
    Scalar::from_rational(BigRational::new(num, den))
}
