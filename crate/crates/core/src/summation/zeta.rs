use crate::numerics::scalar::Scalar;
use crate::numerics::special::bernoulli_numbers;

/// `ζ(-k) = (-1)^k B_{k+1} / (k+1)` with `B_1 = -1/2`, exact.
pub fn zeta_negative(k: usize) -> Scalar {
    let b = bernoulli_numbers(k + 1);
    let value = &b[k + 1] / &Scalar::from_int(k as i64 + 1);
    if k % 2 == 1 {
        -value
    } else {
        value
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(zeta_negative(0), Scalar::ratio(-1, 2));
        assert_eq!(zeta_negative(1), Scalar::ratio(-1, 12));
        assert_eq!(zeta_negative(2), Scalar::zero());
        assert_eq!(zeta_negative(3), Scalar::ratio(1, 120));
        assert_eq!(zeta_negative(5), Scalar::ratio(-1, 252));
    }
}
