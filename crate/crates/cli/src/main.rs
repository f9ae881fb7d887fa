//! Command-line front end: compute EOPs by any route, classify chains,
//! tabulate extended potentials and run the verification suites.
//!
//! Exit codes: 0 success, 1 check failure (or a pole met during
//! evaluation), 2 usage error.

mod record;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use exop::classical::{family_from_name, Family};
use exop::darboux::{classify_family, ExtendedPotential, PotentialSpec, Regularity};
use exop::eop::{eop_by_route, Route};
use exop::kernel::rational::{int, parse_rational};
use exop::partitions::{indices_to_partition, partition_to_indices, Partition, SpectralIndices};
use exop::verify::{run_suite, Suite, SuiteConfig, SuiteReport};
use exop::{BigFloat, Error, Rational, Real};

use record::PolynomialRecord;

const CSV_DIGITS: usize = 30;

#[derive(Parser)]
#[command(
    name = "exop",
    version,
    about = "Exceptional orthogonal polynomials and their Darboux extensions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute W_λ by one route or by all four with a cross-check.
    Eop(EopArgs),
    /// Compare the Adler prediction with the interior root count of W_λ.
    Classify(ClassifyArgs),
    /// Tabulate V^(N), ψ_μ^(N) and optionally the residual on a grid.
    Potential(PotentialArgs),
    /// Run verification suites.
    Check(CheckArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Hermite,
    Laguerre,
    Jacobi,
}

impl FamilyName {
    fn as_str(self) -> &'static str {
        match self {
            FamilyName::Hermite => "hermite",
            FamilyName::Laguerre => "laguerre",
            FamilyName::Jacobi => "jacobi",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Wronskian,
    NoumiJt,
    SchurConfluent,
    GjtConfluent,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    CrossRoute,
    KreinAdler,
    Residual,
    #[value(name = "theorem1")]
    ConfluentLimit,
    Recursions,
    Chain,
    All,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    /// Laguerre or Jacobi α as `p/q`.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// Jacobi β as `p/q`.
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ChainArgs {
    /// Non-increasing parts, e.g. `3,2,2`.
    #[arg(long)]
    partition: Option<String>,
    /// Strictly increasing seed levels, e.g. `2,3,5`.
    #[arg(long)]
    indices: Option<String>,
}

#[derive(Args)]
struct EopArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[command(flatten)]
    chain: ChainArgs,
    /// Accepted for symmetry with `potential`; W_λ does not depend on it.
    #[arg(long)]
    omega: Option<String>,
    #[arg(long, value_enum, default_value = "wronskian")]
    route: RouteArg,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[command(flatten)]
    chain: ChainArgs,
    #[arg(long)]
    omega: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct PotentialArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[command(flatten)]
    chain: ChainArgs,
    /// Oscillator frequency as `p/q`; ignored for Jacobi.
    #[arg(long, default_value = "1")]
    omega: String,
    /// `a:b:n`, `n` equally spaced points from `a` to `b`, all interior.
    #[arg(long, allow_hyphen_values = true)]
    grid: String,
    /// The surviving level μ.
    #[arg(long, default_value_t = 0)]
    state: usize,
    /// Append the relative Schrödinger residual column.
    #[arg(long)]
    residual: bool,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: SuiteArg,
    #[arg(long)]
    max_weight: Option<usize>,
    #[arg(long)]
    max_length: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Pole(_) | Error::Divisibility(_) | Error::DegenerateInput(_) => 1,
            _ => 2,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self {
            code: 1,
            message: format!("write failed: {e}"),
        }
    }
}

type Outcome = std::result::Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Eop(a) => cmd_eop(&a),
        Command::Classify(a) => cmd_classify(&a),
        Command::Potential(a) => cmd_potential(&a),
        Command::Check(a) => cmd_check(&a),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn parse_param(name: &str, text: &Option<String>) -> std::result::Result<Option<Rational>, Failure> {
    text.as_deref()
        .map(|t| parse_rational(t).map_err(|e| Failure::usage(format!("--{name}: {e}"))))
        .transpose()
}

fn family(args: &FamilyArgs) -> std::result::Result<Family, Failure> {
    let alpha = parse_param("alpha", &args.alpha)?;
    let beta = parse_param("beta", &args.beta)?;
    match args.family {
        FamilyName::Laguerre | FamilyName::Jacobi if alpha.is_none() => {
            return Err(Failure::usage(format!(
                "--alpha is required for {}",
                args.family.as_str()
            )));
        }
        FamilyName::Jacobi if beta.is_none() => {
            return Err(Failure::usage("--beta is required for jacobi"));
        }
        _ => {}
    }
    Ok(family_from_name(args.family.as_str(), alpha, beta)?)
}

fn chain(args: &ChainArgs) -> std::result::Result<(Partition, SpectralIndices), Failure> {
    match (&args.partition, &args.indices) {
        (Some(p), _) => {
            let lambda: Partition = p.parse()?;
            let n = partition_to_indices(&lambda);
            Ok((lambda, n))
        }
        (None, Some(n)) => {
            let n: SpectralIndices = n.parse()?;
            Ok((indices_to_partition(&n), n))
        }
        (None, None) => Err(Failure::usage("one of --partition or --indices is required")),
    }
}

fn write_json<T: Serialize>(out: &mut impl Write, value: &T) -> std::result::Result<(), Failure> {
    let text = serde_json::to_string(value).map_err(|e| Failure {
        code: 1,
        message: format!("serialization failed: {e}"),
    })?;
    writeln!(out, "{text}")?;
    Ok(())
}

#[derive(Serialize)]
struct Verdict<'a> {
    verdict: &'a str,
    routes: Vec<&'a str>,
}

fn cmd_eop(args: &EopArgs) -> Outcome {
    if let Some(w) = &args.omega {
        parse_rational(w).map_err(|e| Failure::usage(format!("--omega: {e}")))?;
    }
    let f = family(&args.family)?;
    let (lambda, _) = chain(&args.chain)?;
    let routes: Vec<Route> = match args.route {
        RouteArg::Wronskian => vec![Route::Wronskian],
        RouteArg::NoumiJt => vec![Route::NoumiJt],
        RouteArg::SchurConfluent => vec![Route::SchurConfluent],
        RouteArg::GjtConfluent => vec![Route::GjtConfluent],
        RouteArg::All => Route::ALL.to_vec(),
    };
    let results = routes
        .iter()
        .map(|&r| eop_by_route(&f, &lambda, r))
        .collect::<exop::Result<Vec<_>>>()?;
    let agree = results.windows(2).all(|w| w[0].as_wronskian() == w[1].as_wronskian());
    let mut out = io::stdout().lock();
    for r in &results {
        match args.format {
            Format::Json => write_json(&mut out, &PolynomialRecord::from_result(r))?,
            Format::Text => writeln!(out, "{f} {lambda} [{}]: {}", r.route, r.as_wronskian())?,
        }
    }
    if results.len() > 1 {
        let verdict = if agree { "agree" } else { "disagree" };
        match args.format {
            Format::Json => write_json(
                &mut out,
                &Verdict {
                    verdict,
                    routes: routes.iter().map(|r| r.name()).collect(),
                },
            )?,
            Format::Text => writeln!(out, "verdict: {verdict}")?,
        }
    }
    Ok(agree)
}

#[derive(Serialize)]
struct Classification {
    family: &'static str,
    params: std::collections::BTreeMap<&'static str, String>,
    indices: Vec<usize>,
    partition: Vec<usize>,
    adler: bool,
    interior_roots: usize,
    lower_boundary_root: bool,
    upper_boundary_root: bool,
    agree: bool,
}

fn cmd_classify(args: &ClassifyArgs) -> Outcome {
    if let Some(w) = &args.omega {
        parse_rational(w).map_err(|e| Failure::usage(format!("--omega: {e}")))?;
    }
    let f = family(&args.family)?;
    let (lambda, n) = chain(&args.chain)?;
    let r: Regularity = classify_family(&f, &n)?;
    let agree = r.agrees();
    match args.format {
        Format::Json => write_json(
            &mut io::stdout().lock(),
            &Classification {
                family: f.name(),
                params: f.params().into_iter().map(|(k, v)| (k, v.to_string())).collect(),
                indices: n.as_slice().to_vec(),
                partition: lambda.parts().to_vec(),
                adler: r.predicted,
                interior_roots: r.interior_roots,
                lower_boundary_root: r.lower_boundary_root,
                upper_boundary_root: r.upper_boundary_root,
                agree,
            },
        )?,
        Format::Text => {
            let mut out = io::stdout().lock();
            writeln!(out, "{f} N={n} λ={lambda}")?;
            writeln!(out, "adler={}", r.predicted)?;
            writeln!(out, "roots={}", r.interior_roots)?;
            writeln!(
                out,
                "boundary_roots=lower:{},upper:{}",
                r.lower_boundary_root, r.upper_boundary_root
            )?;
            writeln!(out, "{}", if agree { "agree" } else { "disagree" })?;
        }
    }
    Ok(agree)
}

fn parse_grid(text: &str) -> std::result::Result<Vec<Rational>, Failure> {
    let bad = || Failure::usage(format!("--grid {text:?} must look like a:b:n"));
    let parts: Vec<&str> = text.split(':').collect();
    let [a, b, n] = parts.as_slice() else {
        return Err(bad());
    };
    let a = parse_rational(a).map_err(|_| bad())?;
    let b = parse_rational(b).map_err(|_| bad())?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    if n == 0 {
        return Err(bad());
    }
    if n == 1 {
        return Ok(vec![a]);
    }
    let step = (&b - &a) / int(n as i64 - 1);
    Ok((0..n).map(|k| &a + &step * int(k as i64)).collect())
}

fn cmd_potential(args: &PotentialArgs) -> Outcome {
    let f = family(&args.family)?;
    let omega = parse_rational(&args.omega).map_err(|e| Failure::usage(format!("--omega: {e}")))?;
    let (_, n) = chain(&args.chain)?;
    let grid = parse_grid(&args.grid)?;
    let spec = PotentialSpec::new(f, omega)?;
    let ext = ExtendedPotential::new(&spec, &n)?;
    let state = ext.state(args.state)?;
    for x in &grid {
        spec.chart().check_domain::<BigFloat>(x)?;
    }
    let mut out = io::stdout().lock();
    writeln!(out, "x,V_ext,psi{}", if args.residual { ",residual" } else { "" })?;
    for x in &grid {
        let xr = BigFloat::from_rational(x);
        let at = |e: Error| match e {
            Error::Pole(_) => Failure {
                code: 1,
                message: format!("pole of the extended potential at x = {x}"),
            },
            other => Failure::from(other),
        };
        let v = ext.value(&xr).map_err(at)?;
        let psi = state.eval(&xr).map_err(at)?.value;
        write!(
            out,
            "{},{},{}",
            xr.to_sci(CSV_DIGITS),
            v.to_sci(CSV_DIGITS),
            psi.to_sci(CSV_DIGITS)
        )?;
        if args.residual {
            let r = state.residual(&xr).map_err(at)?;
            write!(out, ",{}", r.to_sci(CSV_DIGITS))?;
        }
        writeln!(out)?;
    }
    Ok(true)
}

#[derive(Serialize)]
struct CheckSummary {
    passed: bool,
    suites: Vec<SuiteReport>,
}

fn cmd_check(args: &CheckArgs) -> Outcome {
    let suites: Vec<Suite> = match args.suite {
        SuiteArg::CrossRoute => vec![Suite::CrossRoute],
        SuiteArg::KreinAdler => vec![Suite::KreinAdler],
        SuiteArg::Residual => vec![Suite::Residual],
        SuiteArg::ConfluentLimit => vec![Suite::ConfluentLimit],
        SuiteArg::Recursions => vec![Suite::Recursions],
        SuiteArg::Chain => vec![Suite::Chain],
        SuiteArg::All => Suite::ALL.to_vec(),
    };
    let config = SuiteConfig {
        max_weight: args.max_weight,
        max_length: args.max_length,
        seed: args.seed,
    };
    let reports: Vec<SuiteReport> = suites.iter().map(|&s| run_suite(s, &config)).collect();
    let passed = reports.iter().all(|r| r.passed);
    match args.format {
        Format::Json => write_json(
            &mut io::stdout().lock(),
            &CheckSummary {
                passed,
                suites: reports,
            },
        )?,
        Format::Text => {
            let mut out = io::stdout().lock();
            for r in &reports {
                writeln!(out, "{r}")?;
                for failure in &r.failures {
                    writeln!(out, "    {failure}")?;
                }
            }
        }
    }
    Ok(passed)
}
