//! Dense Gaussian elimination over [`Scalar`].
//!
//! Exact systems pivot on the first nonzero entry, so results stay exact;
//! systems with real entries pivot on the largest magnitude.

use super::scalar::Scalar;

fn pivot_row(a: &[Vec<Scalar>], col: usize, exact: bool) -> Option<usize> {
    if exact {
        (col..a.len()).find(|&r| !a[r][col].is_zero())
    } else {
        (col..a.len())
            .filter(|&r| !a[r][col].is_zero())
            .max_by(|&r, &s| a[r][col].to_f64().abs().total_cmp(&a[s][col].to_f64().abs()))
    }
}

fn all_exact(a: &[Vec<Scalar>]) -> bool {
    a.iter().all(|row| row.iter().all(Scalar::is_exact))
}

/// Solve `a x = b`; `None` if the matrix is singular.
pub fn solve(mut a: Vec<Vec<Scalar>>, mut b: Vec<Scalar>) -> Option<Vec<Scalar>> {
    let n = a.len();
    assert_eq!(b.len(), n, "right-hand side length must match the matrix");
    let exact = all_exact(&a) && b.iter().all(Scalar::is_exact);
    for col in 0..n {
        let p = pivot_row(&a, col, exact)?;
        a.swap(col, p);
        b.swap(col, p);
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &a[col][col];
            let (top, rest) = a.split_at_mut(r);
            for (target, pv) in rest[0].iter_mut().zip(&top[col]).skip(col) {
                *target = &*target - &(&factor * pv);
            }
            let delta = &factor * &b[col];
            b[r] = &b[r] - &delta;
        }
    }
    let mut x = vec![Scalar::zero(); n];
    for r in (0..n).rev() {
        let mut acc = b[r].clone();
        for c in r + 1..n {
            acc = &acc - &(&a[r][c] * &x[c]);
        }
        x[r] = &acc / &a[r][r];
    }
    Some(x)
}

/// Determinant; fraction-free (Bareiss) on exact input.
pub fn determinant(mut a: Vec<Vec<Scalar>>) -> Scalar {
    let n = a.len();
    if n == 0 {
        return Scalar::one();
    }
    let exact = all_exact(&a);
    let mut sign_flip = false;
    if exact {
        let mut prev = Scalar::one();
        for k in 0..n - 1 {
            let Some(p) = pivot_row(&a, k, true) else {
                return Scalar::zero();
            };
            if p != k {
                a.swap(k, p);
                sign_flip = !sign_flip;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = &num / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        return if sign_flip { -det } else { det };
    }
    let mut det = Scalar::one();
    for col in 0..n {
        let Some(p) = pivot_row(&a, col, false) else {
            return Scalar::zero();
        };
        if p != col {
            a.swap(col, p);
            sign_flip = !sign_flip;
        }
        det = &det * &a[col][col];
        for r in col + 1..n {
            let factor = &a[r][col] / &a[col][col];
            let (top, rest) = a.split_at_mut(r);
            for (target, pv) in rest[0].iter_mut().zip(&top[col]).skip(col) {
                *target = &*target - &(&factor * pv);
            }
        }
    }
    if sign_flip {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| Scalar::from_int(v)).collect())
            .collect()
    }

    #[test]
    fn exact_solve_needs_row_swap() {
        let a = m(&[&[0, 1], &[2, 3]]);
        let x = solve(a, vec![Scalar::from_int(1), Scalar::from_int(7)]).unwrap();
        assert_eq!(x, vec![Scalar::from_int(2), Scalar::from_int(1)]);
        assert!(x.iter().all(Scalar::is_exact));
    }

    #[test]
    fn singular_is_none() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert!(solve(a, vec![Scalar::one(), Scalar::one()]).is_none());
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(m(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]])), Scalar::from_int(4));
        assert_eq!(determinant(m(&[&[0, 1], &[1, 0]])), Scalar::from_int(-1));
        assert_eq!(determinant(m(&[&[1, 1], &[1, 1]])), Scalar::zero());
        let real = vec![
            vec![Scalar::from_f64(2.0), Scalar::from_f64(1.0)],
            vec![Scalar::from_f64(1.0), Scalar::from_f64(3.0)],
        ];
        assert!((determinant(real).to_f64() - 5.0).abs() < 1e-14);
    }
}
