//! Acceptance gate: one PASS/FAIL line per criterion, with wall time.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use resum::accel::{richardson, shanks};
use resum::catalog::lookup;
use resum::fourier::{gibbs_overshoot, heat_solve, FunctionHandle, HeatProblem};
use resum::numerics::sequence::partial_sums;
use resum::pade::staircase::staircase_evaluate;
use resum::pade::{contfrac_to_moments, moments_to_contfrac, ContFracCoeffs, MomentSequence};
use resum::physics::anharmonic::{pade_table_from, PerturbationSeries};
use resum::physics::{
    anharmonic_asymptotic, anharmonic_coefficients, anharmonic_pade_table, casimir_force, quintic_root_study,
    QuinticVariant,
};
use resum::summation::{borel_sum_closed, euler_sum, generic_sum, generic_sum_periodic, zeta_negative};
use resum::{PartialSums, Scalar};

type Outcome = Result<String, String>;

struct Criterion {
    id: usize,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&n| int(n)).collect()
}

fn err(e: resum::Error) -> String {
    e.to_string()
}

fn euler_roundtrip() -> Outcome {
    let b = moments_to_contfrac(&MomentSequence::new(ints(&[1, 1, 5, 61]))).map_err(err)?;
    ensure(b.b == ints(&[1, 4, 9]), format!("b = {:?}", b.b))?;
    let extended = ContFracCoeffs::new(ints(&[1, 4, 9, 16]));
    let a = contfrac_to_moments(&extended, 4);
    ensure(a.a == ints(&[1, 1, 5, 61, 1385]), format!("a = {:?}", a.a))?;
    Ok("b = (1, 4, 9); a_4 = 1385".into())
}

fn anharmonic_table() -> Outcome {
    let four = PerturbationSeries {
        coeffs: vec![Scalar::ratio(1, 2), Scalar::ratio(3, 4), Scalar::ratio(-21, 8), Scalar::ratio(333, 16)],
        subtracted: false,
    };
    let row = &pade_table_from(&four, 1).map_err(err)?[0];
    let (lo, hi) = (row.lower.value.to_fixed(5), row.upper.value.to_fixed(5));
    ensure(lo == "0.66667" && hi == "0.95600", format!("four-coefficient row {lo}, {hi}"))?;

    let published = [[0.66667, 0.95600], [0.73385, 0.87411], [0.76506, 0.84110], [0.78102, 0.82529]];
    let table = anharmonic_pade_table(4).map_err(err)?;
    let mut worst = 0.0f64;
    for (row, want) in table.iter().zip(published) {
        worst = worst.max((row.lower.value.to_f64() - want[0]).abs());
        worst = worst.max((row.upper.value.to_f64() - want[1]).abs());
    }
    ensure(worst <= 1e-4, format!("max table deviation {worst:.2e}"))?;
    Ok(format!("{lo} / {hi}; eight entries within {worst:.1e}"))
}

fn cross_method() -> Outcome {
    let expected = [Scalar::ratio(1, 2), Scalar::ratio(1, 4), Scalar::zero(), Scalar::ratio(-1, 8)];
    for (p, want) in expected.iter().enumerate() {
        let seq = lookup(&format!("alternating-powers-{p}")).map_err(err)?;
        let e = euler_sum(&seq, 50).map_err(err)?.value;
        let b = borel_sum_closed(p);
        let g = generic_sum(&seq).map_err(err)?.value;
        ensure(&e == want && &b == want && &g == want, format!("p = {p}: euler {e}, borel {b}, generic {g}"))?;
    }
    ensure(generic_sum_periodic(&ints(&[1, -1])).map_err(err)? == Scalar::ratio(1, 2), "grandi pattern")?;
    let p3 = generic_sum_periodic(&ints(&[1, -1, 0])).map_err(err)?;
    let p5 = generic_sum_periodic(&ints(&[1, 0, -1, 0, 0])).map_err(err)?;
    ensure(p3 == Scalar::ratio(1, 3) && p5 == Scalar::ratio(2, 5), format!("patterns {p3}, {p5}"))?;
    Ok("1/2, 1/4, 0, -1/8; patterns 1/3, 2/5".into())
}

fn shanks_log2() -> Outcome {
    let sums = partial_sums(&lookup("log2").map_err(err)?, &Scalar::one(), 7).map_err(err)?;
    let table = shanks(&sums, 3).map_err(err)?;
    let best = table.rows[3]
        .values
        .iter()
        .rev()
        .find_map(|v| v.clone())
        .ok_or("third Shanks row is empty")?;
    let ln2 = 2f64.ln();
    let raw = (sums.last().unwrap().to_f64() - ln2).abs();
    let accelerated = (best.to_f64() - ln2).abs();
    ensure(raw > 5e-2 && accelerated < 1e-4, format!("raw {raw:.2e}, accelerated {accelerated:.2e}"))?;
    Ok(format!("error {accelerated:.1e} vs raw {raw:.1e}"))
}

fn richardson_basel() -> Outcome {
    let mut values = vec![Scalar::zero()];
    for n in 1..=13i64 {
        let next = values.last().unwrap() + &Scalar::ratio(1, n * n);
        values.push(next);
    }
    let sums = PartialSums::new(values);
    let target = PI * PI / 6.0;
    let raw = (target - sums.values[10].to_f64()).abs();
    let r = richardson(&sums, 3, 10).map_err(err)?;
    let accelerated = (r.to_f64() - target).abs();
    ensure(accelerated < 1e-5 && (raw - 9.5e-2).abs() < 1e-3, format!("raw {raw:.3e}, accelerated {accelerated:.2e}"))?;
    Ok(format!("error {accelerated:.1e} vs raw {raw:.2e}"))
}

/// `∫₀^∞ e^{-t}/(1+t) dt` by composite Simpson on `[0, 60]`.
fn stieltjes_oracle() -> f64 {
    let (a, b, n) = (0.0f64, 60.0f64, 120_000usize);
    let h = (b - a) / n as f64;
    let f = |t: f64| (-t).exp() / (1.0 + t);
    let mut s = f(a) + f(b);
    for i in 1..n {
        s += f(a + i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    s * h / 3.0
}

fn stieltjes_bracketing() -> Outcome {
    let oracle = stieltjes_oracle();
    ensure((oracle - 0.59634736).abs() < 1e-8, format!("oracle {oracle}"))?;
    let entries = staircase_evaluate(&lookup("euler-factorial").map_err(err)?, &Scalar::one(), 13).map_err(err)?;
    let diag: Vec<f64> = (0..=12).map(|n| entries[2 * n].value.to_f64()).collect();
    let sub: Vec<f64> = (0..=12).map(|n| entries[2 * n + 1].value.to_f64()).collect();
    ensure(diag.windows(2).all(|w| w[1] < w[0]), "[n/n] not strictly decreasing")?;
    ensure(sub.windows(2).all(|w| w[1] > w[0]), "[n/n+1] not strictly increasing")?;
    ensure(sub.iter().zip(&diag).all(|(l, u)| l < u), "lower and upper sequences cross")?;
    let (d, s) = (diag[12] - oracle, oracle - sub[12]);
    ensure(d.abs() < 1e-3 && s.abs() < 1e-3, format!("[12/12] off by {d:.2e}, [12/13] off by {s:.2e}"))?;
    Ok(format!("[12/13] = {:.8} < {oracle:.8} < [12/12] = {:.8}", sub[12], diag[12]))
}

/// Crank–Nicolson on `m` interior points with `u(0) = 1`, `u(π) = 0`, started
/// by four half-steps of backward Euler.
fn crank_nicolson(m: usize, t_end: f64, dt: f64) -> Vec<f64> {
    let dx = PI / (m + 1) as f64;
    let mut u = vec![0.0; m];
    let solve = |u: &mut Vec<f64>, theta: f64, dt: f64| {
        let r = dt / (dx * dx);
        let (a, b) = (-theta * r, 1.0 + 2.0 * theta * r);
        let e = (1.0 - theta) * r;
        let left = 1.0;
        let mut rhs: Vec<f64> = (0..m)
            .map(|j| {
                let um = if j == 0 { left } else { u[j - 1] };
                let up = if j + 1 == m { 0.0 } else { u[j + 1] };
                u[j] + e * (um - 2.0 * u[j] + up)
            })
            .collect();
        rhs[0] += theta * r * left;
        let mut c = vec![0.0; m];
        c[0] = a / b;
        rhs[0] /= b;
        for j in 1..m {
            let denom = b - a * c[j - 1];
            c[j] = a / denom;
            rhs[j] = (rhs[j] - a * rhs[j - 1]) / denom;
        }
        for j in (0..m - 1).rev() {
            rhs[j] -= c[j] * rhs[j + 1];
        }
        *u = rhs;
    };
    for _ in 0..4 {
        solve(&mut u, 1.0, dt / 2.0);
    }
    let steps = ((t_end - 2.0 * dt) / dt).round() as usize;
    for _ in 0..steps {
        solve(&mut u, 0.5, dt);
    }
    u
}

fn heat_equation() -> Outcome {
    let problem = HeatProblem::new(
        FunctionHandle::zero(),
        FunctionHandle::named("1").map_err(err)?,
        FunctionHandle::zero(),
        100,
        vec![0.5, 5.0],
    )
    .map_err(err)?;
    let solution = heat_solve(&problem, true).map_err(err)?;
    let m = 2000;
    let fd = crank_nicolson(m, 0.5, 1e-4);
    let dx = PI / (m + 1) as f64;
    let deviation = (1..=m)
        .step_by(10)
        .map(|j| (solution.eval(0, j as f64 * dx) - fd[j - 1]).abs())
        .fold(0.0, f64::max);
    let steady = (1..200)
        .map(|j| {
            let x = PI * j as f64 / 200.0;
            (solution.eval(1, x) - (1.0 - x / PI)).abs()
        })
        .fold(0.0, f64::max);
    let transient = 2.0 / PI * (-5.0f64).exp();
    ensure(deviation < 1e-4, format!("t = 0.5 deviation from finite differences {deviation:.2e}"))?;
    ensure(
        steady < 1e-6,
        format!(
            "t = 0.5 deviation {deviation:.1e} ok; t = 5 distance to 1 - x/π is {steady:.3e}, \
             the slowest mode alone contributes (2/π)e^-5 = {transient:.3e}"
        ),
    )?;
    Ok(format!("t = 0.5 deviation {deviation:.1e}; t = 5 distance {steady:.1e}"))
}

/// `(2/π) Si(x)` from the Maclaurin series of `Si`.
fn si_series(x: f64) -> f64 {
    let mut term = x;
    let mut sum = 0.0;
    for k in 0..200 {
        let n = (2 * k + 1) as f64;
        sum += term / n;
        term *= -x * x / ((n + 1.0) * (n + 2.0));
        if term.abs() < 1e-20 {
            break;
        }
    }
    2.0 / PI * sum
}

fn gibbs() -> Outcome {
    let v = gibbs_overshoot(&Scalar::pi(30)).map_err(err)?.to_f64();
    let oracle = si_series(PI);
    ensure((v - oracle).abs() < 1e-5 && (v - 1.17898).abs() < 1e-5, format!("value {v}, oracle {oracle}"))?;
    let mut last = f64::INFINITY;
    for alpha in [10.0, 100.0, 1000.0, 10000.0] {
        let d = (gibbs_overshoot(&Scalar::from_f64(alpha)).map_err(err)?.to_f64() - 1.0).abs();
        ensure(d <= 1.0 / alpha && d < last, format!("|v({alpha}) - 1| = {d:.2e}"))?;
        last = d;
    }
    Ok(format!("{v:.7} (series oracle {oracle:.7}); |v - 1| < 1/α"))
}

fn zeta_casimir() -> Outcome {
    let digits = 50;
    ensure(zeta_negative(3) == Scalar::ratio(1, 120), "zeta(-3)")?;
    let (energy, force) = casimir_force(&Scalar::one(), digits).map_err(err)?;
    let pi2 = &Scalar::pi(digits + 10) * &Scalar::pi(digits + 10);
    let tol = Scalar::parse("1e-45").map_err(err)?;
    let de = (&energy + &(&pi2 / &int(720))).abs();
    let df = (&force + &(&pi2 / &int(240))).abs();
    ensure(de < tol && df < tol, format!("energy off by {de}, force off by {df}"))?;
    let h = Scalar::parse("1e-6").map_err(err)?;
    let (e_plus, _) = casimir_force(&(&Scalar::one() + &h), digits).map_err(err)?;
    let (e_minus, _) = casimir_force(&(&Scalar::one() - &h), digits).map_err(err)?;
    let derivative = &(&e_plus - &e_minus) / &(&h * &int(2));
    let gap = (&force + &derivative).abs().to_f64();
    ensure(gap < 1e-8, format!("-dE/dL vs force gap {gap:.2e}"))?;
    Ok(format!("-π²/720, -π²/240; finite-difference gap {gap:.1e}"))
}

/// Root of `x⁵ + x - 1 = 0` by Newton's method.
fn newton_root() -> f64 {
    let mut x = 0.75f64;
    for _ in 0..60 {
        x -= (x.powi(5) + x - 1.0) / (5.0 * x.powi(4) + 1.0);
    }
    x
}

fn quintic() -> Outcome {
    let root = newton_root();
    ensure((root - 0.754878).abs() < 1e-6, format!("Newton root {root}"))?;
    let regular = quintic_root_study(QuinticVariant::Regular, 60, &Scalar::one(), 50).map_err(err)?;
    let r = regular.partial_sum.to_f64();
    ensure((r - root).abs() < 1e-4, format!("regular partial sum {r}"))?;

    let mut last = 0.0f64;
    for k in [20, 40, 60] {
        let s = quintic_root_study(QuinticVariant::Singular, k, &Scalar::one(), 50).map_err(err)?;
        let size = s.partial_sum.to_f64().abs();
        ensure(size > 1e3 * last.max(1.0), format!("singular |S_{k}| = {size:.2e} does not run away"))?;
        last = size;
    }
    let singular = quintic_root_study(QuinticVariant::Singular, 60, &Scalar::one(), 50).map_err(err)?;
    let details = singular.singular.as_ref().ok_or("missing singular details")?;
    let pade = details.pade_value().ok_or("empty staircase")?.to_f64();
    ensure((pade - root).abs() < 1e-4, format!("staircase value {pade}"))?;
    Ok(format!("regular {r:.6}; singular |S_60| = {last:.1e}, staircase {pade:.6}"))
}

fn asymptotics() -> Outcome {
    let series = anharmonic_coefficients(20).map_err(err)?;
    let ratio = |n: usize| {
        let a = series.coeffs[n].abs().to_f64();
        a / anharmonic_asymptotic(n, 30).abs().to_f64()
    };
    let (r10, r20) = (ratio(10), ratio(20));
    ensure((r20 - 1.0).abs() < (r10 - 1.0).abs(), format!("ratio {r10:.4} at 10, {r20:.4} at 20"))?;
    ensure((r20 - 1.0).abs() < 0.2, format!("ratio at 20 is {r20:.4}"))?;
    Ok(format!("ratio {r10:.4} at n = 10, {r20:.4} at n = 20"))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "Euler-number roundtrip", budget: Duration::from_secs(1), run: euler_roundtrip },
        Criterion { id: 2, name: "anharmonic Padé table", budget: Duration::from_secs(10), run: anharmonic_table },
        Criterion { id: 3, name: "cross-method agreement", budget: Duration::MAX, run: cross_method },
        Criterion { id: 4, name: "Shanks on log 2", budget: Duration::from_secs(1), run: shanks_log2 },
        Criterion { id: 5, name: "Richardson on Σ1/n²", budget: Duration::from_secs(1), run: richardson_basel },
        Criterion { id: 6, name: "Stieltjes bracketing", budget: Duration::from_secs(5), run: stieltjes_bracketing },
        Criterion { id: 7, name: "heat equation", budget: Duration::from_secs(30), run: heat_equation },
        Criterion { id: 8, name: "Gibbs overshoot", budget: Duration::from_secs(1), run: gibbs },
        Criterion { id: 9, name: "zeta and Casimir", budget: Duration::MAX, run: zeta_casimir },
        Criterion { id: 10, name: "quintic roots", budget: Duration::from_secs(5), run: quintic },
        Criterion { id: 11, name: "large-order asymptotics", budget: Duration::from_secs(60), run: asymptotics },
    ];
    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > c.budget => Err(format!("{detail}; over the {:?} budget", c.budget)),
            other => other,
        };
        let ms = elapsed.as_secs_f64() * 1e3;
        match outcome {
            Ok(detail) => println!("PASS {:>2} {:<26} {ms:>9.1} ms  {detail}", c.id, c.name),
            Err(detail) => {
                failures += 1;
                println!("FAIL {:>2} {:<26} {ms:>9.1} ms  {detail}", c.id, c.name);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
