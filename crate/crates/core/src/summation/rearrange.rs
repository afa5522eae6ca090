//! Greedy rearrangement of `1 - 1/2 + 1/3 - ...` towards a target.

use crate::numerics::scalar::Scalar;

/// First `n` terms of the greedy rearrangement, as signed indices: `+k` is
/// the term `1/k` (k odd), `-k` the term `-1/k` (k even). A positive term is
/// taken while the running sum is at most the target.
pub fn riemann_rearrange(target: &Scalar, n: usize) -> Vec<i64> {
    let target = target.to_f64();
    let mut next_pos: i64 = 1;
    let mut next_neg: i64 = 2;
    let mut sum = 0.0f64;
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        if sum <= target {
            sum += 1.0 / next_pos as f64;
            out.push(next_pos);
            next_pos += 2;
        } else {
            sum -= 1.0 / next_neg as f64;
            out.push(-next_neg);
            next_neg += 2;
        }
    }
    out
}

/// Sum of the terms named by signed indices.
pub fn rearranged_partial_sum(indices: &[i64]) -> f64 {
    indices.iter().map(|&k| 1.0 / k as f64).sum()
}
