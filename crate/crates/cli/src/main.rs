use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use bcml::bicomplex::{format_cartesian, format_idempotent, parse_bicomplex};
use bcml::harness::{verify, VerifyConfig, VerifyReport};
use bcml::series::FracPowerSeries;
use bcml::special::{bc_gamma_integral, bc_gamma_weierstrass, bc_ml_with, BcValue};
use bcml::{bc_gamma, Algorithm, Bicomplex, Error, MLEvalOptions, MLParameter, SpecialCase};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

mod sweep;

use sweep::{growth_rows, parse_grid, sweep_rows, write_table};

#[derive(Parser, Debug)]
#[command(name = "bcml", version)]
#[command(about = "Bicomplex Gamma and Mittag-Leffler functions: evaluation, sweeps and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one function at one point
    Eval(EvalArgs),
    /// Run the identity suites and write a verification report
    Verify(VerifyArgs),
    /// Evaluate a function over a grid, or sample growth along circles
    Sweep(SweepArgs),
    /// Emit the fractional power series of E_{p/q}(xi^{p/q}) as JSON
    Series(SeriesArgs),
}

#[derive(Args, Debug, Clone)]
#[group(multiple = false)]
struct FunctionChoice {
    /// Mittag-Leffler function E_alpha (needs --alpha)
    #[arg(long)]
    ml: bool,
    /// Gamma function
    #[arg(long)]
    gamma: bool,
    /// Closed-form special case evaluated through E_alpha: 0, 1, 2cos, 2cosh, 3 or 4
    #[arg(long, value_name = "TAG")]
    special: Option<String>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum AlgorithmArg {
    Series,
    Weierstrass,
    Contour,
    /// Gauss–Laguerre integral (Gamma only)
    Integral,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[command(flatten)]
    function: FunctionChoice,
    /// Parameter alpha, e.g. "1.5 + 0.2 j"
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// Argument, cartesian "x0 + x1 i1 + x2 i2 + x3 j" or idempotent "[a + b i1 ; c + d i1]"
    #[arg(long, allow_hyphen_values = true)]
    xi: String,
    #[arg(long, value_enum, default_value = "series")]
    algorithm: AlgorithmArg,
    /// Gauss–Laguerre nodes for --algorithm integral
    #[arg(long, default_value_t = 64)]
    nodes: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Replace the tolerance of every asserted check
    #[arg(long)]
    tol: Option<f64>,
    /// Comma-separated suite names
    #[arg(long, value_delimiter = ',')]
    only: Option<Vec<String>>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[command(flatten)]
    function: FunctionChoice,
    /// Sample max |E_alpha| on circles instead of a grid (real alpha)
    #[arg(long, conflicts_with_all = ["ml", "gamma", "special", "grid"])]
    growth: bool,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// Per-coefficient ranges "x0=a:b:n,x3=c:d:m" or fixed values "x1=v";
    /// unlisted coefficients are 0
    #[arg(long, allow_hyphen_values = true)]
    grid: Option<String>,
    /// Radii for --growth
    #[arg(long, value_delimiter = ',', default_value = "5,10,20,40")]
    radii: Vec<f64>,
    /// Ray angles per radius for --growth
    #[arg(long, default_value_t = 64)]
    angles: usize,
    #[arg(long, value_enum, default_value = "series")]
    algorithm: AlgorithmArg,
    #[arg(long, default_value_t = 64)]
    nodes: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    #[arg(long)]
    p: u32,
    #[arg(long, default_value_t = 1)]
    q: u32,
    /// Truncation order N (coefficients 0..=N)
    #[arg(long, default_value_t = 20)]
    terms: usize,
    /// Differentiate termwise this many times
    #[arg(long)]
    differentiate: Option<u32>,
    /// Emit the terms left over after p-fold differentiation instead
    #[arg(long, conflicts_with = "differentiate")]
    remainder: bool,
    /// Also sum the series at this point
    #[arg(long, allow_hyphen_values = true)]
    xi: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug)]
enum CliError {
    Eval(Error),
    Io(io::Error),
    Failures(usize),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Eval(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn options() -> CliResult<MLEvalOptions> {
    let mut opts = MLEvalOptions::default();
    if let Ok(v) = std::env::var("BCML_MAX_TERMS") {
        opts.max_terms = v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("BCML_MAX_TERMS must be an integer, got `{v}`")))?;
    }
    opts.validate()?;
    Ok(opts)
}

fn parse_alpha(src: Option<&str>) -> CliResult<MLParameter> {
    let src = src.ok_or_else(|| Error::Parse("--alpha is required for this function".into()))?;
    Ok(MLParameter::new(parse_bicomplex(src)?)?)
}

/// The function selected on the command line, ready to evaluate.
#[derive(Debug, Clone)]
pub enum Target {
    Ml(MLParameter, Algorithm),
    Special(SpecialCase, Algorithm),
    Gamma(GammaMethod),
}

#[derive(Debug, Clone, Copy)]
pub enum GammaMethod {
    Lanczos,
    Weierstrass(usize),
    Integral(usize),
}

impl Target {
    fn from_args(
        f: &FunctionChoice,
        alpha: Option<&str>,
        algorithm: AlgorithmArg,
        nodes: usize,
        opts: &MLEvalOptions,
    ) -> CliResult<Self> {
        let ml_algorithm = || match algorithm {
            AlgorithmArg::Series => Ok(Algorithm::Series),
            AlgorithmArg::Weierstrass => Ok(Algorithm::Weierstrass),
            AlgorithmArg::Contour => Ok(Algorithm::Contour),
            AlgorithmArg::Integral => Err(Error::Parse("the integral algorithm applies to --gamma only".into())),
        };
        if !(f.ml || f.gamma || f.special.is_some()) {
            return Err(Error::Parse("choose one of --ml, --gamma or --special".into()).into());
        }
        if f.gamma {
            return Ok(Target::Gamma(match algorithm {
                AlgorithmArg::Series => GammaMethod::Lanczos,
                AlgorithmArg::Weierstrass => GammaMethod::Weierstrass(opts.weierstrass_factors),
                AlgorithmArg::Integral => GammaMethod::Integral(nodes),
                AlgorithmArg::Contour => {
                    return Err(Error::Parse("the contour algorithm applies to --ml only".into()).into())
                }
            }));
        }
        if let Some(tag) = &f.special {
            return Ok(Target::Special(tag.parse()?, ml_algorithm()?));
        }
        Ok(Target::Ml(parse_alpha(alpha)?, ml_algorithm()?))
    }

    pub fn algorithm_name(&self) -> &'static str {
        match self {
            Target::Ml(_, a) | Target::Special(_, a) => a.name(),
            Target::Gamma(GammaMethod::Lanczos) => "lanczos",
            Target::Gamma(GammaMethod::Weierstrass(_)) => "weierstrass",
            Target::Gamma(GammaMethod::Integral(_)) => "integral",
        }
    }

    pub fn eval(&self, xi: &Bicomplex, opts: &MLEvalOptions) -> Result<BcValue, Error> {
        let exact = |value| BcValue {
            value,
            error_estimate: 0.0,
        };
        match self {
            Target::Ml(alpha, algorithm) => bc_ml_with(alpha, xi, *algorithm, opts),
            Target::Special(tag, algorithm) => {
                let alpha = MLParameter::real(tag.alpha())?;
                bc_ml_with(&alpha, &tag.ml_argument(xi), *algorithm, opts)
            }
            Target::Gamma(GammaMethod::Lanczos) => bc_gamma(xi).map(exact),
            Target::Gamma(GammaMethod::Weierstrass(n)) => bc_gamma_weierstrass(xi, *n).map(exact),
            Target::Gamma(GammaMethod::Integral(n)) => bc_gamma_integral(xi, *n).map(exact),
        }
    }
}

fn emit(out: Option<&PathBuf>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

#[derive(Serialize)]
struct EvalJson {
    algorithm: &'static str,
    xi: Bicomplex,
    value: Bicomplex,
    cartesian: String,
    idempotent: String,
    xi1: [f64; 2],
    xi2: [f64; 2],
    n_xi: f64,
    norm: f64,
    j_modulus: [f64; 2],
    null_cone: bool,
    error_estimate: f64,
}

fn cmd_eval(a: EvalArgs) -> CliResult<()> {
    let opts = options()?;
    let xi = parse_bicomplex(&a.xi)?;
    let target = Target::from_args(&a.function, a.alpha.as_deref(), a.algorithm, a.nodes, &opts)?;
    let v = target.eval(&xi, &opts)?;
    let value = v.value;
    let (v1, v2) = value.to_idempotent();
    let jm = value.j_modulus();
    let text = match a.format {
        Format::Text => format!(
            "value      = {}\nidempotent = {}\nn_xi       = {}\nnorm       = {}\nj_modulus  = {}\nnull_cone  = {}\n",
            format_cartesian(&value),
            format_idempotent(&value),
            value.n_xi(),
            value.norm(),
            jm,
            value.is_null_cone(),
        ),
        Format::Csv => {
            let grid = sweep::Grid {
                axes: [vec![xi.x0], vec![xi.x1], vec![xi.x2], vec![xi.x3]],
            };
            write_table(&sweep_rows(&target, &grid, &opts), false)?
        }
        Format::Json => {
            let j = EvalJson {
                algorithm: target.algorithm_name(),
                xi,
                value,
                cartesian: format_cartesian(&value),
                idempotent: format_idempotent(&value),
                xi1: [v1.re, v1.im],
                xi2: [v2.re, v2.im],
                n_xi: value.n_xi(),
                norm: value.norm(),
                j_modulus: [jm.a, jm.b],
                null_cone: value.is_null_cone(),
                error_estimate: v.error_estimate,
            };
            let mut s = serde_json::to_string_pretty(&j).map_err(io::Error::other)?;
            s.push('\n');
            s
        }
    };
    emit(a.out.as_ref(), &text)
}

fn report_csv(report: &VerifyReport) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "section", "identity", "point", "lhs_x0", "lhs_x1", "lhs_x2", "lhs_x3", "rhs_x0", "rhs_x1",
        "rhs_x2", "rhs_x3", "abs_residual", "rel_residual", "tolerance", "pass",
    ])
    .map_err(io::Error::other)?;
    for s in &report.sections {
        for r in &s.reports {
            let point: Vec<String> = r.point.iter().map(format_cartesian).collect();
            let mut row = vec![s.identity.clone(), r.identity.clone(), point.join("; ")];
            for b in [r.lhs, r.rhs] {
                row.extend([b.x0, b.x1, b.x2, b.x3].iter().map(|x| format!("{x:?}")));
            }
            row.push(format!("{:?}", r.abs_residual));
            row.push(format!("{:?}", r.rel_residual));
            row.push(r.tolerance.map(|t| format!("{t:?}")).unwrap_or_default());
            row.push(r.pass.map(|p| p.to_string()).unwrap_or_default());
            w.write_record(&row).map_err(io::Error::other)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| io::Error::other(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn cmd_verify(a: VerifyArgs) -> CliResult<()> {
    let cfg = VerifyConfig {
        seed: a.seed,
        tol: a.tol,
        only: a.only,
        opts: options()?,
    };
    let report = verify(&cfg)?;
    let text = match a.format {
        Format::Csv => report_csv(&report)?,
        Format::Json | Format::Text => {
            let mut s = serde_json::to_string_pretty(&report).map_err(io::Error::other)?;
            s.push('\n');
            s
        }
    };
    emit(a.out.as_ref(), &text)?;
    let mut err = io::stderr().lock();
    for s in &report.sections {
        writeln!(
            err,
            "{:<17} {:>6} checks {:>6} passed {:>4} failed {:>6} rejected{}",
            s.identity,
            s.checks,
            s.passed,
            s.failed,
            s.rejected,
            if s.asserted { "" } else { "  (reported only)" }
        )?;
    }
    if report.all_passed() {
        Ok(())
    } else {
        Err(CliError::Failures(report.failed))
    }
}

fn cmd_sweep(a: SweepArgs) -> CliResult<()> {
    let opts = options()?;
    let format = match a.format {
        Format::Text => Format::Csv,
        f => f,
    };
    let table = if a.growth {
        let alpha = parse_alpha(a.alpha.as_deref())?;
        let r = alpha.as_real().filter(|r| *r > 0.0).ok_or_else(|| Error::DomainAlpha {
            reason: "growth sweeps need real alpha > 0".into(),
        })?;
        growth_rows(r, &a.radii, a.angles, &opts)?
    } else {
        let target = Target::from_args(&a.function, a.alpha.as_deref(), a.algorithm, a.nodes, &opts)?;
        let grid = parse_grid(a.grid.as_deref().unwrap_or(""))?;
        sweep_rows(&target, &grid, &opts)
    };
    let text = write_table(&table, format == Format::Json)?;
    emit(a.out.as_ref(), &text)
}

#[derive(Serialize)]
struct SeriesEval<'a> {
    series: &'a FracPowerSeries,
    xi: Bicomplex,
    value: Bicomplex,
    tail: f64,
    terms: usize,
}

fn cmd_series(a: SeriesArgs) -> CliResult<()> {
    let series = if a.remainder {
        FracPowerSeries::ml_derivative_remainder(a.p, a.q)?
    } else {
        let s = FracPowerSeries::ml(a.p, a.q, a.terms)?;
        match a.differentiate {
            Some(n) => s.differentiate(n),
            None => s,
        }
    };
    let mut text = match &a.xi {
        None => serde_json::to_string(&series),
        Some(src) => {
            let xi = parse_bicomplex(src)?;
            let v = series.eval(&xi)?;
            serde_json::to_string(&SeriesEval {
                series: &series,
                xi,
                value: v.value,
                tail: v.tail,
                terms: v.terms,
            })
        }
    }
    .map_err(io::Error::other)?;
    text.push('\n');
    emit(a.out.as_ref(), &text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Series(a) => cmd_series(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failures(n)) => {
            eprintln!("{n} asserted checks failed");
            ExitCode::from(1)
        }
        Err(CliError::Eval(e)) => {
            eprintln!("error: {e}");
            match e.root() {
                Error::Parse(_) => ExitCode::from(2),
                _ => ExitCode::from(3),
            }
        }
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(4)
        }
    }
}
