use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;

use resum::accel::{richardson, shanks};
use resum::fourier::{endpoint_recovery, gibbs_accelerate, heat_solve, sine_coefficients, FunctionHandle, HeatProblem, SineSeries};
use resum::numerics::sequence::partial_sums;
use resum::pade::moments::OrthogonalPolySet;
use resum::pade::{
    contfrac_to_moments, moments_to_contfrac, pade_approximant, pade_from_coeffs, staircase_evaluate, ContFracCoeffs,
};
use resum::physics::quintic::quintic_bisection;
use resum::physics::{anharmonic_coefficients, quintic_root_study, two_level_spectrum, QuinticVariant, TwoLevelSystem};
use resum::summation::{euler_sum, generic_sum_periodic, Method};
use resum::{CoefficientSequence, PartialSums, Scalar, SignConvention};

fn rational() -> impl Strategy<Value = Scalar> {
    (-40i64..=40, 1i64..=12).prop_map(|(p, q)| Scalar::ratio(p, q))
}

fn positive_rational() -> impl Strategy<Value = Scalar> {
    (1i64..=30, 1i64..=8).prop_map(|(p, q)| Scalar::ratio(p, q))
}

fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn exact_inputs_stay_exact(c in prop::collection::vec(rational(), 6..10), x in rational()) {
        let seq = CoefficientSequence::explicit("random", c.clone(), SignConvention::AsIs);
        let sums = partial_sums(&seq, &x, c.len() - 1).unwrap();
        prop_assert!(sums.values.iter().all(Scalar::is_exact));
        if let Ok(table) = shanks(&sums, 2) {
            prop_assert!(table.rows.iter().flat_map(|r| r.values.iter().flatten()).all(Scalar::is_exact));
        }
        prop_assert!(richardson(&sums, 3, 1).unwrap().is_exact());
        if let Ok(p) = pade_from_coeffs(&c, 2, 3) {
            prop_assert!(p.num.iter().chain(&p.den).all(Scalar::is_exact));
        }
    }

    #[test]
    fn doubling_digits_is_stable(p in 1i64..500, q in 1i64..50, d in 20u32..60) {
        let x = Scalar::ratio(p, q);
        let tol = 10f64.powi(1 - d as i32);
        for (lo, hi) in [
            (x.sqrt(d).unwrap(), x.sqrt(2 * d).unwrap()),
            (x.ln(d).unwrap(), x.ln(2 * d).unwrap()),
            (x.recip().exp(d), x.recip().exp(2 * d)),
        ] {
            let rel = (&lo - &hi).abs().to_f64() / hi.abs().to_f64().max(1.0);
            prop_assert!(rel < tol, "relative change {rel:e} at {d} digits");
        }
    }

    #[test]
    fn partial_sums_telescope(c in prop::collection::vec(rational(), 1..12), x in rational()) {
        let seq = CoefficientSequence::explicit("random", c.clone(), SignConvention::AlternatingImplied);
        let sums = partial_sums(&seq, &x, c.len() - 1).unwrap();
        let signed = seq.signed_prefix(c.len()).unwrap();
        let mut power = Scalar::one();
        for (n, term) in signed.iter().enumerate() {
            let prev = if n == 0 { Scalar::zero() } else { sums.values[n - 1].clone() };
            prop_assert_eq!(&sums.values[n] - &prev, term * &power);
            power = &power * &x;
        }
    }

    #[test]
    fn shanks_exact_on_geometric_model(s in rational(), k in rational(), r in rational()) {
        prop_assume!(!k.is_zero() && r.abs() != Scalar::one() && !r.is_zero());
        let values = (0..7).map(|n| &s + &(&k * &r.powi(n))).collect();
        let table = shanks(&PartialSums::new(values), 1).unwrap();
        prop_assert!(table.rows[1].values.iter().all(|v| v.as_ref() == Some(&s)));
    }

    #[test]
    fn richardson_exact_on_inverse_power_model(s in rational(), c in prop::collection::vec(rational(), 1..5), start in 1usize..6) {
        let k = c.len();
        let values = (0..start + k + 1)
            .map(|n| {
                if n == 0 {
                    return Scalar::zero();
                }
                c.iter().enumerate().fold(s.clone(), |acc, (j, cj)| &acc + &(cj / &int(n as i64).powi(j as i32 + 1)))
            })
            .collect();
        prop_assert_eq!(richardson(&PartialSums::new(values), k, start).unwrap(), s);
    }

    #[test]
    fn richardson_low_orders_match_explicit_formulas(a in prop::collection::vec(rational(), 8), n in 0usize..4) {
        let sums = PartialSums::new(a.clone());
        let m = |j: usize| int((n + j) as i64);
        let first = &(&m(1) * &a[n + 1]) - &(&m(0) * &a[n]);
        prop_assert_eq!(richardson(&sums, 1, n).unwrap(), first);
        let second = &(&(&(&m(2) * &m(2)) * &a[n + 2]) - &(&(&int(2) * &(&m(1) * &m(1))) * &a[n + 1]))
            + &(&(&m(0) * &m(0)) * &a[n]);
        prop_assert_eq!(richardson(&sums, 2, n).unwrap(), &second / &int(2));
        let cube = |j: usize| m(j).powi(3);
        let third = &(&(&(&cube(3) * &a[n + 3]) - &(&(&int(3) * &cube(2)) * &a[n + 2]))
            + &(&(&int(3) * &cube(1)) * &a[n + 1]))
            - &(&cube(0) * &a[n]);
        prop_assert_eq!(richardson(&sums, 3, n).unwrap(), &third / &int(6));
    }

    #[test]
    fn generic_sum_axioms(pattern in prop::collection::vec(rational(), 1..6), lambda in rational()) {
        let mut pattern = pattern;
        let total = pattern.iter().fold(Scalar::zero(), |acc, x| &acc + x);
        pattern.push(-total);
        let s = generic_sum_periodic(&pattern).unwrap();
        // t, p1, .., p_{k-1}, t, p1, ... is t followed by the rotated pattern
        let mut rotated = pattern[1..].to_vec();
        rotated.push(pattern[0].clone());
        prop_assert_eq!(&s, &(&pattern[0] + &generic_sum_periodic(&rotated).unwrap()));
        let scaled: Vec<Scalar> = pattern.iter().map(|x| &lambda * x).collect();
        prop_assert_eq!(generic_sum_periodic(&scaled).unwrap(), &lambda * &s);
    }

    #[test]
    fn euler_sum_agrees_with_convergent_sum(first in rational(), p in -9i64..=9, q in 10i64..=20) {
        let r = Scalar::ratio(p, q);
        let (a, ratio) = (first.clone(), r.clone());
        let seq = CoefficientSequence::from_fn("geometric", SignConvention::AsIs, move |n| &a * &ratio.powi(n as i32));
        let result = euler_sum(&seq, 30).unwrap();
        prop_assert_eq!(result.method, Method::Euler);
        prop_assert_eq!(result.value, &first / &(&Scalar::one() - &r));
    }

    #[test]
    fn contfrac_roundtrip(b in prop::collection::vec(positive_rational(), 1..=8)) {
        let k = b.len();
        let moments = contfrac_to_moments(&ContFracCoeffs::new(b.clone()), k);
        prop_assert_eq!(moments_to_contfrac(&moments).unwrap().b, b);
    }

    #[test]
    fn pade_matches_series(c in prop::collection::vec(rational(), 7), n in 0usize..4, m in 0usize..4) {
        prop_assume!(!c[0].is_zero());
        if let Ok(p) = pade_from_coeffs(&c, n, m) {
            prop_assert_eq!(&p.expand(n + m + 1)[..], &c[..n + m + 1]);
        }
    }

    #[test]
    fn staircase_brackets_and_matches_linear_solve(b in prop::collection::vec(positive_rational(), 6), z in positive_rational()) {
        let a = contfrac_to_moments(&ContFracCoeffs::new(b), 6).a;
        let seq = CoefficientSequence::explicit("stieltjes", a, SignConvention::AlternatingImplied);
        let entries = staircase_evaluate(&seq, &z, 3).unwrap();
        for e in &entries {
            let (n, m) = e.orders;
            let direct = pade_approximant(&seq, n, m).unwrap().eval(&z).unwrap();
            prop_assert_eq!(&direct, &e.value, "[{}/{}]", n, m);
        }
        let upper: Vec<&Scalar> = entries.iter().step_by(2).map(|e| &e.value).collect();
        let lower: Vec<&Scalar> = entries.iter().skip(1).step_by(2).map(|e| &e.value).collect();
        prop_assert!(upper.windows(2).all(|w| w[1] <= w[0]));
        prop_assert!(lower.windows(2).all(|w| w[1] >= w[0]));
        prop_assert!(lower.iter().all(|l| upper.iter().all(|u| l <= u)));
    }

    #[test]
    fn orthogonal_polynomials_are_monic_with_parity(b in prop::collection::vec(positive_rational(), 1..8)) {
        for (n, p) in OrthogonalPolySet::from_contfrac(&b).polys.iter().enumerate() {
            prop_assert_eq!(p.len(), n + 1);
            prop_assert_eq!(&p[n], &Scalar::one());
            prop_assert!(p.iter().enumerate().all(|(i, c)| (n - i) % 2 == 0 || c.is_zero()));
        }
    }

    #[test]
    fn two_level_trace_and_determinant(a in rational(), b in rational(), c in rational(), re in -3.0f64..3.0, im in -3.0f64..3.0) {
        let sys = TwoLevelSystem { a: a.clone(), b: b.clone(), c: c.clone() };
        let eps = Complex64::new(re, im);
        let s = two_level_spectrum(&sys, eps);
        let (a, b, c) = (a.to_f64(), b.to_f64(), c.to_f64());
        let scale = 1.0 + a.abs() + b.abs() + (eps * c).norm();
        prop_assert!((s.plus + s.minus - (a + b)).norm() < 1e-12 * scale);
        let det = Complex64::from(a * b) - eps * eps * c * c;
        prop_assert!((s.plus * s.minus - det).norm() < 1e-11 * scale * scale);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn polynomial_coefficients_match_quadrature(c in prop::collection::vec(rational(), 1..5)) {
        let closed = sine_coefficients(&FunctionHandle::Polynomial(c.clone()), 12, 30).unwrap();
        let coeffs: Vec<f64> = c.iter().map(Scalar::to_f64).collect();
        let f = FunctionHandle::closure(move |x| coeffs.iter().rev().fold(0.0, |acc, a| acc * x + a));
        let numeric = sine_coefficients(&f, 12, 30).unwrap();
        let scale = c.iter().map(|a| a.to_f64().abs()).sum::<f64>() * PI.powi(c.len() as i32) + 1.0;
        for n in 1..=12 {
            prop_assert!((closed.coeff(n).to_f64() - numeric.coeff(n).to_f64()).abs() < 1e-11 * scale);
        }
    }

    #[test]
    fn gibbs_residual_decays_like_cube(c in prop::collection::vec(rational(), 1..4)) {
        let series = sine_coefficients(&FunctionHandle::Polynomial(c), 64, 30).unwrap();
        let (_, residual) = gibbs_accelerate(&series).unwrap();
        let weighted: Vec<f64> = (1..=64).map(|n| residual.coeff(n).to_f64().abs() * (n as f64).powi(3)).collect();
        let lower = weighted[..32].iter().cloned().fold(0.0, f64::max);
        let upper = weighted[32..].iter().cloned().fold(0.0, f64::max);
        prop_assert!(upper <= 1.5 * lower + 1e-6, "lower {lower}, upper {upper}");
    }

    #[test]
    fn endpoint_recovery_inverts_tail(f0 in rational(), fpi in rational(), d in rational()) {
        let coeffs = (1..=40)
            .map(|n| {
                let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
                let tail = 2.0 / (PI * n as f64) * (sign * fpi.to_f64() + f0.to_f64());
                Scalar::from_f64(tail + d.to_f64() / (n as f64).powi(3))
            })
            .collect();
        let (g0, gpi) = endpoint_recovery(&SineSeries::new(coeffs)).unwrap();
        prop_assert!((g0.to_f64() - f0.to_f64()).abs() < 1e-9 * (1.0 + d.to_f64().abs()));
        prop_assert!((gpi.to_f64() - fpi.to_f64()).abs() < 1e-9 * (1.0 + d.to_f64().abs()));
    }

    #[test]
    fn heat_reconstructions_agree(g in rational(), h in rational(), t in 0.05f64..1.0) {
        let make = || HeatProblem::new(
            FunctionHandle::zero(),
            FunctionHandle::Constant(g.clone()),
            FunctionHandle::Constant(h.clone()),
            200,
            vec![t],
        ).unwrap();
        let plain = heat_solve(&make(), false).unwrap();
        let fast = heat_solve(&make(), true).unwrap();
        for j in 1..20 {
            let x = PI * j as f64 / 20.0;
            let gap = (plain.eval(0, x) - fast.eval(0, x)).abs();
            prop_assert!(gap <= 10.0 * plain.truncation_estimate(0, x) + 1e-12, "x = {x}: gap {gap:e}");
        }
    }

    #[test]
    fn heat_maximum_principle(scale in 1i64..20, t in 0.0f64..2.0) {
        // scale·x(π - x) ≥ 0 on [0, π]
        let f = FunctionHandle::Polynomial(vec![Scalar::zero(), &Scalar::pi(30) * &int(scale), -int(scale)]);
        let max_f = scale as f64 * PI * PI / 4.0;
        let s = heat_solve(&HeatProblem::new(f, FunctionHandle::zero(), FunctionHandle::zero(), 60, vec![t]).unwrap(), false).unwrap();
        for (x, u) in s.profile(0, 31) {
            let eps = s.truncation_estimate(0, x);
            prop_assert!(u >= -eps && u <= max_f + eps, "u({x}) = {u}");
        }
    }

    #[test]
    fn quintic_regular_series_converges_inside_radius(p in 1i64..=20) {
        let eps = Scalar::ratio(p, 20);
        let k = 80;
        let study = quintic_root_study(QuinticVariant::Regular, k, &eps, 30).unwrap();
        let root = quintic_bisection(QuinticVariant::Regular, eps.to_f64());
        let q = eps.to_f64() / 1.25f64.powf(0.8);
        let last = study.coeffs[k].to_f64().abs() * eps.to_f64().powi(k as i32);
        let bound = 10.0 * last / (1.0 - q) + 1e-12;
        prop_assert!((study.partial_sum.to_f64() - root).abs() < bound);
    }
}

#[test]
fn anharmonic_signs_and_growth() {
    let c = anharmonic_coefficients(20).unwrap().coeffs;
    for (n, a) in c.iter().enumerate().skip(1) {
        assert_eq!(a.is_positive(), n % 2 == 1, "sign at order {n}");
    }
    // |a_{n+1}/a_n| / n settles onto 3 from above
    let ratio: Vec<f64> = (2..20).map(|n| (&c[n + 1] / &c[n]).abs().to_f64() / n as f64).collect();
    assert!(ratio.windows(2).all(|w| w[1] < w[0] && w[1] > 3.0));
    assert!(ratio.last().unwrap() - 3.0 < 0.1);
}

#[test]
fn anharmonic_table_columns_straddle() {
    let table = resum::physics::anharmonic_pade_table(6).unwrap();
    let upper: Vec<&Scalar> = table.iter().map(|r| &r.upper.value).collect();
    let lower: Vec<&Scalar> = table.iter().map(|r| &r.lower.value).collect();
    assert!(upper.windows(2).all(|w| w[1] < w[0]));
    assert!(lower.windows(2).all(|w| w[1] > w[0]));
    assert!(lower.last().unwrap() < upper.last().unwrap());
}

#[test]
fn singular_quintic_diverges_but_staircase_converges() {
    let one = Scalar::one();
    let small = quintic_root_study(QuinticVariant::Singular, 30, &one, 30).unwrap();
    let large = quintic_root_study(QuinticVariant::Singular, 60, &one, 30).unwrap();
    assert!(large.partial_sum.abs().to_f64() > 1e20 * small.partial_sum.abs().to_f64().max(1.0));
    let pade = large.singular.unwrap().pade_value().unwrap().to_f64();
    assert!((pade - large.reference_root).abs() < 1e-4);
}
