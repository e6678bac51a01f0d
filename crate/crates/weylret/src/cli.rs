//! Command-line interface. [`run`] returns the text for stdout or an error
//! that carries its exit code.

// Errors are built once on the way to an exit code, so their size does not matter.
#![allow(clippy::result_large_err)]

use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use weylret_core::fan::build_fan;
use weylret_core::matroid::{
    default_base_point, has_unique_maximum, is_coxeter_matroid_with, is_flag_matroid,
    phi_polytope_check, search_closest_but_not_matroid,
};
use weylret_core::orbit::{fixed_points, geometric_table, sample_rational_point, SampleProfile};
use weylret_core::retraction::{
    algebraic_retract, closest_set, matroid_retract, retraction_table, MatroidStrategy, Method,
};
use weylret_core::weyl::DEFAULT_ENUMERATION_CAP;
use weylret_core::{GroupDescriptor, RetractionTable, WeylError};

use crate::io::{
    fan_json, matrix_json, parse_element, parse_group, parse_matrix, parse_set, parse_table,
    parse_vector, parse_window, polytope_json, query_json, render, table_json, window_json,
    windows_json, ParseError,
};
use crate::suites::{run_suite, SuiteError, SuiteOptions};

pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_NOT_A_MATROID: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_PRECONDITION: i32 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error("{error}")]
    NotAMatroid { error: WeylError, witness: Value },
    #[error(transparent)]
    Precondition(WeylError),
    #[error("suite {suite} failed {failed} of {total} cases")]
    SuiteFailed {
        suite: String,
        failed: usize,
        total: usize,
        output: String,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(ParseError::Weyl(_)) | CliError::Precondition(_) => EXIT_PRECONDITION,
            CliError::Parse(_) | CliError::Usage(_) => EXIT_PARSE,
            CliError::NotAMatroid { .. } => EXIT_NOT_A_MATROID,
            CliError::SuiteFailed { .. } | CliError::Write { .. } => EXIT_FAILURE,
        }
    }
}

impl From<WeylError> for CliError {
    fn from(e: WeylError) -> Self {
        match e {
            WeylError::NotAMatroidAt { ref u, ref minimal } => {
                let witness = json!({ "u": window_json(u), "minimal": windows_json(minimal) });
                CliError::NotAMatroid { error: e, witness }
            }
            e => CliError::Precondition(e),
        }
    }
}

impl From<SuiteError> for CliError {
    fn from(e: SuiteError) -> Self {
        match e {
            SuiteError::UnknownSuite(_) => CliError::Usage(e.to_string()),
            SuiteError::Weyl(e) => e.into(),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "weylret",
    version,
    about = "Retractions onto subsets of classical Weyl groups"
)]
pub struct Cli {
    /// Write the JSON result to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Pretty-print JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Retract a group element onto a subset.
    Retract(RetractArgs),
    /// Coxeter matroid checks, polytope edges and search
    #[command(subcommand)]
    Matroid(MatroidCommand),
    /// Torus orbit closures: fixed points, retraction tables, sampling
    #[command(subcommand)]
    Orbit(OrbitCommand),
    /// Retraction fans: build and point queries
    #[command(subcommand)]
    Fan(FanCommand),
    /// Run a named experiment suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct SetArgs {
    /// Group: JSON descriptor or shorthand such as A3, B4, D4, A2xBC2.
    #[arg(long)]
    pub group: String,
    /// Subset: JSON array of windows, inline or as a file path.
    #[arg(long)]
    pub set: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RetractMethod {
    Algebraic,
    Matroid,
    Both,
}

#[derive(Debug, Args)]
pub struct RetractArgs {
    #[command(flatten)]
    pub set: SetArgs,
    /// The element to retract, e.g. [2,3,1,4].
    #[arg(long, allow_hyphen_values = true)]
    pub u: String,
    #[arg(long, value_enum, default_value_t = RetractMethod::Algebraic)]
    pub method: RetractMethod,
    /// Also report the brute-force set of closest members.
    #[arg(long)]
    pub closest: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Strategy {
    MinimalSet,
    GreedyFirst,
}

impl From<Strategy> for MatroidStrategy {
    fn from(s: Strategy) -> Self {
        match s {
            Strategy::MinimalSet => MatroidStrategy::MinimalSet,
            Strategy::GreedyFirst => MatroidStrategy::GreedyFirst,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum MatroidCommand {
    /// Check the Coxeter matroid property (unique minimum for every u).
    Check {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long, value_enum, default_value_t = Strategy::MinimalSet)]
        strategy: Strategy,
        /// Also run the maximality and flag-matroid checks.
        #[arg(long)]
        all: bool,
        /// Largest group order to enumerate.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u128,
    },
    /// Edges of the polytope conv{w·ν : w ∈ M} and whether they follow roots.
    Polytope {
        #[command(flatten)]
        set: SetArgs,
        /// Base point as a JSON array of rationals; defaults to a point of
        /// the fundamental chamber.
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<String>,
    },
    /// Search for a subset whose greedy retraction always gives the unique
    /// closest member although it is not a Coxeter matroid.
    Search {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 1)]
        min_size: usize,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        /// Stop after this many subsets.
        #[arg(long, default_value_t = 100_000)]
        limit: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableMethod {
    Geometric,
    Algebraic,
    Matroid,
}

#[derive(Debug, Subcommand)]
pub enum OrbitCommand {
    /// Plücker support and torus-fixed points of the orbit closure of x.
    FixedPoints {
        /// Invertible matrix: JSON rows of rationals, inline or file.
        #[arg(long)]
        matrix: String,
    },
    /// Retraction table of the orbit closure of x.
    Table {
        #[arg(long)]
        matrix: String,
        #[arg(long, value_enum, default_value_t = TableMethod::Geometric)]
        method: TableMethod,
    },
    /// Draw a reproducible random matrix.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// generic, sparse:<percent> or interval:<v>:<w>.
        #[arg(long, default_value = "generic")]
        profile: String,
    },
}

#[derive(Debug, Args)]
pub struct FanSource {
    /// Matrix whose orbit closure defines the fan.
    #[arg(long, conflicts_with = "table")]
    pub matrix: Option<String>,
    /// Retraction table (window string to window string).
    #[arg(long, requires = "group")]
    pub table: Option<String>,
    #[arg(long)]
    pub group: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum FanCommand {
    /// Maximal cones and lineality space.
    Build {
        #[command(flatten)]
        source: FanSource,
    },
    /// The cone containing λ.
    Query {
        #[command(flatten)]
        source: FanSource,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite name.
    pub suite: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random matrices per n for the orbit suites.
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    /// Time budget in seconds for the fano suite.
    #[arg(long, default_value_t = 600)]
    pub budget: u64,
    /// Include the wall time in the report.
    #[arg(long)]
    pub timing: bool,
}

fn load_set(args: &SetArgs) -> Result<(GroupDescriptor, weylret_core::SubsetM), CliError> {
    let g = parse_group(&args.group)?;
    let m = parse_set(&g, &args.set)?;
    Ok((g, m))
}

fn retract(args: &RetractArgs) -> Result<Value, CliError> {
    let (g, m) = load_set(&args.set)?;
    let u = parse_element(&g, &args.u)?;
    let algebraic = match args.method {
        RetractMethod::Algebraic | RetractMethod::Both => Some(algebraic_retract(&m, &u)?),
        RetractMethod::Matroid => None,
    };
    let matroid = match args.method {
        RetractMethod::Matroid | RetractMethod::Both => {
            Some(matroid_retract(&m, &u, MatroidStrategy::MinimalSet)?)
        }
        RetractMethod::Algebraic => None,
    };
    if args.method != RetractMethod::Both && !args.closest {
        let r = algebraic.or(matroid).expect("one method ran");
        return Ok(window_json(&r));
    }
    let mut out = json!({ "u": window_json(&u) });
    if let Some(r) = &algebraic {
        out["algebraic"] = window_json(r);
    }
    if let Some(r) = &matroid {
        out["matroid"] = window_json(r);
    }
    if args.closest {
        let (d, argmin) = closest_set(&m, &u)?;
        out["closest"] = json!({ "distance": d, "elements": windows_json(&argmin) });
    }
    Ok(out)
}

fn matroid(cmd: &MatroidCommand) -> Result<Value, CliError> {
    match cmd {
        MatroidCommand::Check {
            set,
            strategy,
            all,
            cap,
        } => {
            let (_, m) = load_set(set)?;
            let verdict = is_coxeter_matroid_with(&m, (*strategy).into(), *cap)?;
            let mut out = json!({ "is_matroid": verdict.is_matroid, "size": m.len() });
            if let Some((u, minimal)) = &verdict.witness {
                out["witness"] = json!({ "u": window_json(u), "minimal": windows_json(minimal) });
            }
            if *all {
                out["maximality"] = json!(has_unique_maximum(&m)?.is_matroid);
                out["flag_matroid"] = json!(is_flag_matroid(&m)?.is_matroid);
            }
            Ok(out)
        }
        MatroidCommand::Polytope { set, nu } => {
            let (g, m) = load_set(set)?;
            let nu = match nu {
                Some(text) => parse_vector(text)?,
                None => default_base_point(&g),
            };
            Ok(polytope_json(&phi_polytope_check(&m, &nu)?))
        }
        MatroidCommand::Search {
            group,
            min_size,
            max_size,
            limit,
        } => {
            let g = parse_group(group)?;
            let (hit, examined) =
                search_closest_but_not_matroid(&g, *min_size..=*max_size, *limit)?;
            Ok(json!({
                "found": hit.as_ref().map(|m| windows_json(m.iter())),
                "examined": examined,
                "exhausted": examined < *limit,
            }))
        }
    }
}

fn parse_profile(text: &str) -> Result<SampleProfile, CliError> {
    let bad = || {
        CliError::Usage(format!(
            "unknown profile {text:?}; use generic, sparse:<percent> or interval:<v>:<w>"
        ))
    };
    let mut parts = text.splitn(3, ':');
    match parts.next() {
        Some("generic") if parts.next().is_none() => Ok(SampleProfile::Generic),
        Some("sparse") => {
            let pct: u8 = parts
                .next()
                .and_then(|p| p.parse().ok())
                .filter(|&p| p <= 100)
                .ok_or_else(bad)?;
            Ok(SampleProfile::Sparse {
                density_percent: pct,
            })
        }
        Some("interval") => {
            let v = parse_window(parts.next().ok_or_else(bad)?)?;
            let w = parse_window(parts.next().ok_or_else(bad)?)?;
            Ok(SampleProfile::Interval(v, w))
        }
        _ => Err(bad()),
    }
}

fn orbit(cmd: &OrbitCommand) -> Result<Value, CliError> {
    match cmd {
        OrbitCommand::FixedPoints { matrix } => {
            let x = parse_matrix(matrix)?;
            let fp = fixed_points(&x)?;
            let support: serde_json::Map<String, Value> = (1..=fp.support.rank())
                .map(|d| {
                    (
                        d.to_string(),
                        json!(fp.support.get(d).iter().collect::<Vec<_>>()),
                    )
                })
                .collect();
            Ok(
                json!({ "fixed_points": windows_json(fp.points.iter()), "plucker_support": support }),
            )
        }
        OrbitCommand::Table { matrix, method } => {
            let x = parse_matrix(matrix)?;
            let table = orbit_table(&x, *method)?;
            Ok(table_json(&table))
        }
        OrbitCommand::Sample { n, seed, profile } => {
            let profile = parse_profile(profile)?;
            Ok(matrix_json(&sample_rational_point(*n, *seed, &profile)?))
        }
    }
}

fn orbit_table(
    x: &weylret_core::RationalMatrix,
    method: TableMethod,
) -> Result<RetractionTable, CliError> {
    Ok(match method {
        TableMethod::Geometric => geometric_table(x)?,
        TableMethod::Algebraic => retraction_table(&fixed_points(x)?.points, Method::Algebraic)?,
        TableMethod::Matroid => retraction_table(
            &fixed_points(x)?.points,
            Method::Matroid(MatroidStrategy::MinimalSet),
        )?,
    })
}

fn load_fan(source: &FanSource) -> Result<weylret_core::fan::OrbitFan, CliError> {
    let (g, table) = match (&source.matrix, &source.table) {
        (Some(m), _) => {
            let x = parse_matrix(m)?;
            let g = match &source.group {
                Some(text) => parse_group(text)?,
                None => GroupDescriptor::symmetric(x.nrows())?,
            };
            (g, geometric_table(&x)?)
        }
        (None, Some(t)) => {
            let g = parse_group(source.group.as_deref().expect("clap requires --group"))?;
            let table = parse_table(&g, t)?;
            (g, table)
        }
        (None, None) => return Err(CliError::Usage("fan needs --matrix or --table".into())),
    };
    Ok(build_fan(&g, &table)?)
}

fn fan(cmd: &FanCommand) -> Result<Value, CliError> {
    match cmd {
        FanCommand::Build { source } => {
            let fan = load_fan(source)?;
            let mut out = fan_json(&fan);
            let convex: serde_json::Map<String, Value> = fan
                .strong_convexity_report()
                .into_iter()
                .map(|(y, b)| (y.to_string(), json!(b)))
                .collect();
            out["strongly_convex"] = Value::Object(convex);
            Ok(out)
        }
        FanCommand::Query { source, lambda } => {
            let fan = load_fan(source)?;
            let lambda = parse_vector(lambda)?;
            Ok(query_json(&fan.query(&lambda)?))
        }
    }
}

fn verify(args: &VerifyArgs, pretty: bool) -> Result<Value, CliError> {
    let opts = SuiteOptions {
        seed: args.seed,
        samples: args.samples,
        budget: Duration::from_secs(args.budget),
    };
    let report = run_suite(&args.suite, &opts)?;
    let v = report.to_json(args.timing);
    if !report.passed {
        return Err(CliError::SuiteFailed {
            suite: report.suite.clone(),
            failed: report.cases_total - report.cases_passed,
            total: report.cases_total,
            output: render(&v, pretty),
        });
    }
    Ok(v)
}

/// Runs one parsed command and returns the rendered output.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let value = match &cli.command {
        Command::Retract(args) => retract(args)?,
        Command::Matroid(cmd) => matroid(cmd)?,
        Command::Orbit(cmd) => orbit(cmd)?,
        Command::Fan(cmd) => fan(cmd)?,
        Command::Verify(args) => verify(args, cli.pretty)?,
    };
    let text = render(&value, cli.pretty);
    match &cli.out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|source| CliError::Write {
                path: path.display().to_string(),
                source,
            })?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

/// Parses `args`, runs the command and returns `(stdout, stderr, exit code)`.
pub fn main_with_args<I, T>(args: I) -> (String, String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                (text, String::new(), 0)
            } else {
                (String::new(), text, code)
            };
        }
    };
    match run(&cli) {
        Ok(out) => (out, String::new(), 0),
        Err(e) => {
            let code = e.exit_code();
            let mut err = format!("error: {e}\n");
            match &e {
                CliError::NotAMatroid { witness, .. } => err.push_str(&render(witness, false)),
                CliError::SuiteFailed { output, .. } => return (output.clone(), err, code),
                _ => {}
            }
            (String::new(), err, code)
        }
    }
}
