use num_complex::Complex64;

use crate::numerics::scalar::Scalar;

/// `H = [[a, εc], [εc, b]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoLevelSystem {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoLevelSpectrum {
    pub plus: Complex64,
    pub minus: Complex64,
    /// `±i(a - b)/(2c)`; absent when `c = 0`.
    pub branch_points: Option<[Complex64; 2]>,
}

/// `E±(ε) = (a + b ± √((a - b)² + 4ε²c²)) / 2` and the branch points where the
/// square root vanishes.
pub fn two_level_spectrum(sys: &TwoLevelSystem, eps: Complex64) -> TwoLevelSpectrum {
    let (a, b, c) = (sys.a.to_f64(), sys.b.to_f64(), sys.c.to_f64());
    let root = Complex64::from((a - b) * (a - b)) + 4.0 * eps * eps * c * c;
    let root = if eps.im == 0.0 {
        // real coupling: keep the real branch so that E+ ≥ E-
        Complex64::from(root.re.max(0.0).sqrt())
    } else {
        root.sqrt()
    };
    let mean = Complex64::from(a + b);
    let branch_points = (c != 0.0).then(|| {
        let p = Complex64::new(0.0, (a - b) / (2.0 * c));
        [p, -p]
    });
    TwoLevelSpectrum {
        plus: (mean + root) / 2.0,
        minus: (mean - root) / 2.0,
        branch_points,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(a: i64, b: i64, c: i64) -> TwoLevelSystem {
        TwoLevelSystem {
            a: Scalar::from_int(a),
            b: Scalar::from_int(b),
            c: Scalar::from_int(c),
        }
    }

    #[test]
    fn golden_ratio() {
        let s = two_level_spectrum(&sys(1, 0, 1), Complex64::from(1.0));
        let r5 = 5f64.sqrt();
        assert!((s.plus.re - (1.0 + r5) / 2.0).abs() < 1e-14);
        assert!((s.minus.re - (1.0 - r5) / 2.0).abs() < 1e-14);
        assert_eq!(s.branch_points.unwrap()[0], Complex64::new(0.0, 0.5));
    }

    #[test]
    fn unperturbed_and_degenerate() {
        let s = two_level_spectrum(&sys(2, 5, 3), Complex64::from(0.0));
        assert_eq!((s.plus.re, s.minus.re), (5.0, 2.0));
        let d = two_level_spectrum(&sys(2, 2, 3), Complex64::from(-0.5));
        assert!((d.plus.re - 3.5).abs() < 1e-14 && (d.minus.re - 0.5).abs() < 1e-14);
        assert_eq!(d.branch_points.unwrap()[0], Complex64::new(0.0, 0.0));
    }

    #[test]
    fn root_vanishes_at_branch_point() {
        let s = two_level_spectrum(&sys(3, 1, 2), Complex64::new(0.0, 0.5));
        assert!((s.plus - s.minus).norm() < 1e-7);
    }
}
