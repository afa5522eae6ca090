//! Command-line front end: parses a run configuration, dispatches to the
//! library and renders a [`Report`].

mod report;

use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

pub use report::{Format, Report};

use crate::accel::{richardson, richardson_table, shanks, AccelTable};
use crate::catalog;
use crate::error::{Error, Result};
use crate::fourier::{heat_solve, FunctionHandle, HeatProblem};
use crate::numerics::scalar::{Scalar, DEFAULT_DIGITS};
use crate::numerics::sequence::{partial_sums, CoefficientSequence};
use crate::numerics::series_json::parse_series_json;
use crate::pade::diagnostics::{carleman_check, stieltjes_hankel_check};
use crate::pade::staircase::moments_of;
use crate::pade::{moments_to_contfrac, pade_approximant, staircase_evaluate};
use crate::physics::{
    anharmonic_asymptotic, anharmonic_coefficients, anharmonic_pade_table, casimir_force, quintic_root_study,
    two_level_spectrum, QuinticVariant, TwoLevelSystem,
};
use crate::summation::{
    borel_sum_closed, borel_sum_numeric, euler_alternating_power, euler_sum, generic_sum, generic_sum_periodic,
    geometric_sum, rearranged_partial_sum, riemann_rearrange, zeta_negative, SummationResult,
};

#[derive(Debug, Parser)]
#[command(name = "resum", version, about = "Accelerate convergent series and sum divergent ones")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Decimal digits for real arithmetic and printed reals.
    #[arg(long, global = true, env = "RESUM_DIGITS", default_value_t = DEFAULT_DIGITS,
          value_parser = clap::value_parser!(u32).range(10..=1000))]
    pub digits: u32,
    /// Series definition: a JSON file or a catalog name.
    #[arg(long, global = true)]
    pub input: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Shanks or Richardson acceleration of partial sums.
    Accel(AccelArgs),
    /// Values of divergent series.
    Resum(ResumArgs),
    /// Padé approximants, the staircase and Stieltjes diagnostics.
    Pade(PadeArgs),
    /// Heat equation with boundary forcing.
    Heat(HeatArgs),
    /// Anharmonic-oscillator ground-state series.
    Anharmonic(AnharmonicArgs),
    /// Casimir energy and force per unit area.
    Casimir(CasimirArgs),
    /// Perturbative roots of x^5 + x - 1 = 0.
    Quintic(QuinticArgs),
    /// Eigenvalues and branch points of a two-level system.
    TwoLevel(TwoLevelArgs),
    /// List the built-in series.
    Catalog,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AccelMethod {
    Shanks,
    Richardson,
}

#[derive(Debug, Args)]
pub struct AccelArgs {
    #[arg(long, value_enum, default_value_t = AccelMethod::Shanks)]
    pub method: AccelMethod,
    /// Number of partial sums A_0..A_{N-1}.
    #[arg(long, default_value_t = 8)]
    pub terms: usize,
    /// Shanks iterations.
    #[arg(long, default_value_t = 1)]
    pub iterations: usize,
    /// Richardson order.
    #[arg(long, default_value_t = 1)]
    pub order: usize,
    /// Richardson start index N; all admissible starts when omitted.
    #[arg(long)]
    pub start: Option<usize>,
    /// Evaluation point of the power series.
    #[arg(long, default_value = "1")]
    pub point: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ResumMethod {
    Euler,
    Borel,
    Generic,
}

#[derive(Debug, Args)]
pub struct ResumArgs {
    /// Sum the endlessly repeated comma-separated pattern.
    #[arg(long, allow_hyphen_values = true)]
    pub pattern: Option<String>,
    /// Method applied to the --input series.
    #[arg(long, value_enum)]
    pub method: Option<ResumMethod>,
    /// Evaluation point for Borel summation of the --input series.
    #[arg(long, default_value = "1")]
    pub point: String,
    /// `first,ratio` of a geometric series.
    #[arg(long, allow_hyphen_values = true)]
    pub geometric: Option<String>,
    /// Print zeta(-k).
    #[arg(long)]
    pub zeta: Option<usize>,
    /// Euler and closed-form Borel values of Σ (-1)^{n+1} n^p.
    #[arg(long)]
    pub alternating_power: Option<usize>,
    /// Greedy rearrangement of the alternating harmonic series towards a target.
    #[arg(long, allow_hyphen_values = true)]
    pub rearrange: Option<String>,
    /// Number of rearranged terms.
    #[arg(long, default_value_t = 1000)]
    pub terms: usize,
}

#[derive(Debug, Args)]
pub struct PadeArgs {
    /// `n,m` orders of a single approximant.
    #[arg(long)]
    pub orders: Option<String>,
    /// Staircase depth.
    #[arg(long)]
    pub staircase: Option<usize>,
    /// Evaluation point.
    #[arg(long, allow_hyphen_values = true)]
    pub at: Option<String>,
    /// Continued-fraction coefficients b_1..b_K from the first K+1 moments.
    #[arg(long)]
    pub contfrac: Option<usize>,
    /// Hankel and Carleman diagnostics on the first K moments.
    #[arg(long)]
    pub diagnose: Option<usize>,
}

#[derive(Debug, Args)]
pub struct HeatArgs {
    /// Initial data: a built-in function name or a two-column CSV file.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub f: String,
    /// Left boundary value g(t).
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub g: String,
    /// Right boundary value h(t).
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub h: String,
    #[arg(long, default_value_t = 100)]
    pub modes: usize,
    /// Subtract the 1/n tail and add the boundary layer in closed form.
    #[arg(long)]
    pub accelerate: bool,
    /// Comma-separated output times.
    #[arg(long)]
    pub times: String,
    /// Number of interior evaluation points.
    #[arg(long, default_value_t = 9)]
    pub eval_grid: usize,
}

#[derive(Debug, Args)]
pub struct AnharmonicArgs {
    /// Padé table of the subtracted series at coupling 1.
    #[arg(long)]
    pub table: bool,
    /// Table rows.
    #[arg(long, default_value_t = 4)]
    pub depth: usize,
    /// Ground-state coefficients through this order.
    #[arg(long)]
    pub coeffs: Option<usize>,
    /// Compare coefficients with the large-order formula through this order.
    #[arg(long)]
    pub asymptotic: Option<usize>,
}

#[derive(Debug, Args)]
pub struct CasimirArgs {
    /// Plate separation.
    #[arg(long, default_value = "1")]
    pub separation: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Regular,
    Singular,
}

#[derive(Debug, Args)]
pub struct QuinticArgs {
    #[arg(long, value_enum, default_value_t = VariantArg::Regular)]
    pub variant: VariantArg,
    /// Series order K.
    #[arg(long, default_value_t = 60)]
    pub order: usize,
    #[arg(long, default_value = "1")]
    pub eps: String,
    /// Also list the series coefficients.
    #[arg(long)]
    pub coeffs: bool,
}

#[derive(Debug, Args)]
pub struct TwoLevelArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    #[arg(long, allow_hyphen_values = true)]
    pub b: String,
    #[arg(long, allow_hyphen_values = true)]
    pub c: String,
    /// Real part of the coupling.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub eps: f64,
    /// Imaginary part of the coupling.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub eps_im: f64,
}

/// Process exit code for an error: 3 for numerical failures, 2 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_numerical() {
        3
    } else {
        2
    }
}

/// Execute a parsed command line and render its report.
pub fn run(cli: &Cli) -> Result<String> {
    Ok(execute(cli)?.render(cli.format))
}

pub fn execute(cli: &Cli) -> Result<Report> {
    let digits = cli.digits;
    match &cli.command {
        Command::Accel(args) => accel(args, &load_input(cli)?, digits),
        Command::Resum(args) => resum(args, cli, digits),
        Command::Pade(args) => pade(args, &load_input(cli)?, digits),
        Command::Heat(args) => heat(args, digits),
        Command::Anharmonic(args) => anharmonic(args, digits),
        Command::Casimir(args) => casimir(args, digits),
        Command::Quintic(args) => quintic(args, digits),
        Command::TwoLevel(args) => two_level(args, digits),
        Command::Catalog => {
            let mut r = Report::new(["name", "description"]);
            for e in catalog::entries() {
                r.push([e.name, e.description]);
            }
            Ok(r)
        }
    }
}

fn load_input(cli: &Cli) -> Result<CoefficientSequence> {
    let input = cli
        .input
        .as_deref()
        .ok_or_else(|| Error::InvalidInput("this command needs --input (a series file or catalog name)".into()))?;
    if Path::new(input).is_file() {
        let text = std::fs::read_to_string(input).map_err(|e| Error::InvalidInput(format!("{input}: {e}")))?;
        parse_series_json(&text)
    } else {
        catalog::lookup(input)
    }
}

fn scalar_list(text: &str) -> Result<Vec<Scalar>> {
    text.split(',').map(|s| Scalar::parse(s.trim())).collect()
}

fn usize_pair(text: &str) -> Result<(usize, usize)> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let parse = |s: &str| s.parse::<usize>().map_err(|_| Error::InvalidInput(format!("bad order '{s}'")));
    match parts.as_slice() {
        [n, m] => Ok((parse(n)?, parse(m)?)),
        _ => Err(Error::InvalidInput(format!("expected 'n,m', got '{text}'"))),
    }
}

fn render_opt(v: &Option<Scalar>, digits: u32) -> String {
    v.as_ref().map_or_else(String::new, |s| s.render(digits))
}

fn f64_cell(v: f64, digits: u32) -> String {
    Scalar::try_from_f64(v).map_or_else(|| v.to_string(), |s| s.render(digits))
}

fn accel_report(table: &AccelTable, digits: u32) -> Report {
    let mut r = Report::new(["row", "index", "value"]);
    for row in &table.rows {
        for (i, v) in row.values.iter().enumerate() {
            r.push([row.label.clone(), i.to_string(), render_opt(v, digits)]);
        }
    }
    r
}

fn accel(args: &AccelArgs, seq: &CoefficientSequence, digits: u32) -> Result<Report> {
    if args.terms == 0 {
        return Err(Error::InvalidInput("--terms must be positive".into()));
    }
    let point = Scalar::parse(&args.point)?;
    let sums = partial_sums(seq, &point, args.terms - 1)?;
    match args.method {
        AccelMethod::Shanks => Ok(accel_report(&shanks(&sums, args.iterations)?, digits)),
        AccelMethod::Richardson => match args.start {
            Some(n) => {
                let mut r = Report::new(["order", "start", "value"]);
                let v = richardson(&sums, args.order, n)?;
                r.push([args.order.to_string(), n.to_string(), v.render(digits)]);
                Ok(r)
            }
            None => Ok(accel_report(&richardson_table(&sums, args.order)?, digits)),
        },
    }
}

fn summation_report(result: &SummationResult, digits: u32) -> Report {
    let mut r = Report::new(["quantity", "value"]);
    r.push(["value".to_string(), result.value.render(digits)]);
    r.push(["method".to_string(), result.method.to_string()]);
    for d in &result.diagnostics {
        r.push(["note".to_string(), d.clone()]);
    }
    r
}

fn resum(args: &ResumArgs, cli: &Cli, digits: u32) -> Result<Report> {
    let value_row = |label: &str, v: Scalar| {
        let mut r = Report::new(["quantity", "value"]);
        r.push([label.to_string(), v.render(digits)]);
        r
    };
    if let Some(pattern) = &args.pattern {
        return Ok(value_row("generic", generic_sum_periodic(&scalar_list(pattern)?)?));
    }
    if let Some(pair) = &args.geometric {
        let v = scalar_list(pair)?;
        let [first, ratio] = v.as_slice() else {
            return Err(Error::InvalidInput("--geometric expects 'first,ratio'".into()));
        };
        return Ok(value_row("generic", geometric_sum(first, ratio)?));
    }
    if let Some(k) = args.zeta {
        return Ok(value_row(&format!("zeta(-{k})"), zeta_negative(k)));
    }
    if let Some(p) = args.alternating_power {
        let mut r = Report::new(["quantity", "value"]);
        r.push(["euler".to_string(), euler_alternating_power(p).render(digits)]);
        r.push(["borel".to_string(), borel_sum_closed(p).render(digits)]);
        return Ok(r);
    }
    if let Some(target) = &args.rearrange {
        let target = Scalar::parse(target)?;
        let indices = riemann_rearrange(&target, args.terms.max(1));
        let sum = rearranged_partial_sum(&indices);
        let mut r = Report::new(["quantity", "value"]);
        let head: Vec<String> = indices.iter().take(12).map(i64::to_string).collect();
        r.push(["first terms".to_string(), head.join(" ")]);
        r.push(["partial sum".to_string(), f64_cell(sum, digits)]);
        r.push(["distance to target".to_string(), f64_cell((sum - target.to_f64()).abs(), digits)]);
        return Ok(r);
    }
    let method = args
        .method
        .ok_or_else(|| Error::InvalidInput("resum needs --pattern, --geometric, --zeta, --alternating-power, --rearrange or --method".into()))?;
    let seq = load_input(cli)?;
    let result = match method {
        ResumMethod::Euler => euler_sum(&seq, digits)?,
        ResumMethod::Borel => borel_sum_numeric(&seq, &Scalar::parse(&args.point)?, digits)?,
        ResumMethod::Generic => generic_sum(&seq)?,
    };
    Ok(summation_report(&result, digits))
}

fn pade(args: &PadeArgs, seq: &CoefficientSequence, digits: u32) -> Result<Report> {
    let at = args.at.as_deref().map(Scalar::parse).transpose()?;
    if let Some(orders) = &args.orders {
        let (n, m) = usize_pair(orders)?;
        let p = pade_approximant(seq, n, m)?;
        let mut r = Report::new(["part", "power", "coefficient"]);
        for (k, c) in p.num.iter().enumerate() {
            r.push(["numerator".to_string(), k.to_string(), c.render(digits)]);
        }
        for (k, c) in p.den.iter().enumerate() {
            r.push(["denominator".to_string(), k.to_string(), c.render(digits)]);
        }
        if let Some(z) = &at {
            let v = p.eval(z).ok_or_else(|| Error::DomainError("approximant has a pole at the point".into()))?;
            r.push(["value".to_string(), String::new(), v.render(digits)]);
        }
        return Ok(r);
    }
    if let Some(depth) = args.staircase {
        let z = at.ok_or_else(|| Error::InvalidInput("--staircase needs --at".into()))?;
        let mut r = Report::new(["approximant", "n", "m", "value"]);
        for e in staircase_evaluate(seq, &z, depth)? {
            r.push([e.label, e.orders.0.to_string(), e.orders.1.to_string(), e.value.render(digits)]);
        }
        return Ok(r);
    }
    if let Some(k) = args.contfrac {
        let b = moments_to_contfrac(&moments_of(seq, k + 1)?.normalized()?)?;
        let mut r = Report::new(["k", "b"]);
        for (i, v) in b.b.iter().enumerate() {
            r.push([(i + 1).to_string(), v.render(digits)]);
        }
        return Ok(r);
    }
    if let Some(k) = args.diagnose {
        let a = moments_of(seq, k)?;
        let hankel = stieltjes_hankel_check(&a)?;
        let mut r = Report::new(["check", "order", "value", "status"]);
        for e in &hankel.entries {
            let name = if e.shifted { "hankel-shifted" } else { "hankel" };
            r.push([
                name.to_string(),
                e.order.to_string(),
                e.determinant.render(digits),
                format!("{:?}", e.status).to_lowercase(),
            ]);
        }
        r.push([
            "hankel-verdict".to_string(),
            String::new(),
            String::new(),
            format!("{:?}", hankel.verdict).to_lowercase(),
        ]);
        if k >= 4 {
            let c = carleman_check(&a)?;
            let status = if c.satisfied { "satisfied" } else { "violated" };
            r.push(["carleman-c".to_string(), String::new(), f64_cell(c.c, digits), status.to_string()]);
            r.push([
                "carleman-excess-exponent".to_string(),
                String::new(),
                f64_cell(c.excess_exponent, digits),
                status.to_string(),
            ]);
        }
        return Ok(r);
    }
    Err(Error::InvalidInput("pade needs --orders, --staircase, --contfrac or --diagnose".into()))
}

fn function_arg(text: &str) -> Result<FunctionHandle> {
    if Path::new(text).is_file() {
        let csv = std::fs::read_to_string(text).map_err(|e| Error::InvalidInput(format!("{text}: {e}")))?;
        FunctionHandle::from_csv(&csv)
    } else {
        FunctionHandle::named(text)
    }
}

fn heat(args: &HeatArgs, digits: u32) -> Result<Report> {
    let times = args
        .times
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| Error::InvalidInput(format!("bad time '{t}'"))))
        .collect::<Result<Vec<_>>>()?;
    let problem = HeatProblem::new(
        function_arg(&args.f)?,
        function_arg(&args.g)?,
        function_arg(&args.h)?,
        args.modes,
        times,
    )?;
    let solution = heat_solve(&problem, args.accelerate)?;
    let mut r = Report::new(["t", "x", "u"]);
    let places = digits.min(12);
    for (k, t) in solution.time_grid.iter().enumerate() {
        for (x, u) in solution.profile(k, args.eval_grid) {
            r.push([f64_cell(*t, places), f64_cell(x, places), f64_cell(u, places)]);
        }
    }
    Ok(r)
}

fn anharmonic(args: &AnharmonicArgs, digits: u32) -> Result<Report> {
    if args.table {
        let mut r = Report::new(["approximant", "value", "approximant", "value"]);
        for row in anharmonic_pade_table(args.depth)? {
            r.push([
                row.lower.label,
                row.lower.value.to_fixed(5),
                row.upper.label,
                row.upper.value.to_fixed(5),
            ]);
        }
        return Ok(r);
    }
    if let Some(k) = args.coeffs {
        let mut r = Report::new(["order", "coefficient"]);
        for (n, c) in anharmonic_coefficients(k)?.coeffs.iter().enumerate() {
            r.push([n.to_string(), c.render(digits)]);
        }
        return Ok(r);
    }
    if let Some(k) = args.asymptotic {
        let series = anharmonic_coefficients(k)?;
        let mut r = Report::new(["order", "coefficient", "formula", "ratio"]);
        for (n, c) in series.coeffs.iter().enumerate().skip(1) {
            let formula = anharmonic_asymptotic(n, digits);
            let ratio = &c.abs() / &formula.abs();
            r.push([n.to_string(), c.render(digits), formula.render(digits.min(20)), ratio.render(digits.min(12))]);
        }
        return Ok(r);
    }
    Err(Error::InvalidInput("anharmonic needs --table, --coeffs or --asymptotic".into()))
}

fn casimir(args: &CasimirArgs, digits: u32) -> Result<Report> {
    let l = Scalar::parse(&args.separation)?;
    let (energy, force) = casimir_force(&l, digits)?;
    let mut r = Report::new(["quantity", "value"]);
    r.push(["zeta(-3)".to_string(), zeta_negative(3).render(digits)]);
    r.push(["energy per area".to_string(), energy.render(digits)]);
    r.push(["force per area".to_string(), force.render(digits)]);
    Ok(r)
}

fn quintic(args: &QuinticArgs, digits: u32) -> Result<Report> {
    let variant = match args.variant {
        VariantArg::Regular => QuinticVariant::Regular,
        VariantArg::Singular => QuinticVariant::Singular,
    };
    let eps = Scalar::parse(&args.eps)?;
    let study = quintic_root_study(variant, args.order, &eps, digits)?;
    let mut r = Report::new(["quantity", "value"]);
    r.push(["radius".to_string(), study.radius.render(digits)]);
    r.push(["partial sum".to_string(), study.partial_sum.to_real(digits).render(digits)]);
    r.push(["bisection root".to_string(), f64_cell(study.reference_root, digits.min(12))]);
    if let Some(s) = &study.singular {
        if let Some(v) = s.pade_value() {
            r.push(["staircase pade".to_string(), v.to_real(digits).render(digits)]);
        }
        for z in &s.runaway_scaled {
            r.push(["runaway eps^(1/4) z".to_string(), format!("{:.6}{:+.6}i", z.re, z.im)]);
        }
    }
    if args.coeffs {
        for (k, c) in study.coeffs.iter().enumerate() {
            r.push([format!("a_{k}"), c.render(digits)]);
        }
    }
    Ok(r)
}

fn two_level(args: &TwoLevelArgs, digits: u32) -> Result<Report> {
    let sys = TwoLevelSystem {
        a: Scalar::parse(&args.a)?,
        b: Scalar::parse(&args.b)?,
        c: Scalar::parse(&args.c)?,
    };
    let spectrum = two_level_spectrum(&sys, Complex64::new(args.eps, args.eps_im));
    let places = digits.min(15) as usize;
    let cell = |z: Complex64| {
        // adding zero maps -0.0 to 0.0
        let z = Complex64::new(z.re + 0.0, z.im + 0.0);
        if z.im == 0.0 {
            format!("{:.places$}", z.re)
        } else {
            format!("{:.places$}{:+.places$}i", z.re, z.im)
        }
    };
    let mut r = Report::new(["quantity", "value"]);
    r.push(["E+".to_string(), cell(spectrum.plus)]);
    r.push(["E-".to_string(), cell(spectrum.minus)]);
    match spectrum.branch_points {
        Some([p, q]) => {
            r.push(["branch point".to_string(), cell(p)]);
            r.push(["branch point".to_string(), cell(q)]);
        }
        None => r.push(["branch point".to_string(), String::new()]),
    }
    Ok(r)
}
