//! Command-line front end: `enumerate`, `oracle`, `check`, `bench`, `gen`, `plot`.
//!
//! [`run`] takes the argument list and output streams explicitly and returns
//! the process exit code, so every command can be driven from tests.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::enumerator::{enumerate_vertices, EnumerationParams, EnumerationReport};
use crate::error::Error;
use crate::io::{parse_ine, write_ine, write_vertices, VertexFormat};
use crate::oracle::{compare_cycles, oracle_projection_vertices};
use crate::plot::{curve_csv, polygon_svg, support_curve};
use crate::polytope::{
    make_cross_polytope, make_hypercube, make_permutahedron, make_random_bounded, HPolytope,
};
use crate::support::{PlaneSpec, Point2};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_UNBOUNDED_OR_EMPTY: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;
pub const EXIT_MISMATCH: i32 = 5;

/// Distance within which enumerator and oracle vertices must agree.
pub const CHECK_TOL: f64 = 1e-6;

#[derive(Debug, Parser)]
#[command(name = "polyproj", version, about = "Vertices of 2D projections of H-polytopes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate the projection's vertices in CCW order.
    Enumerate(RunConfig),
    /// Brute-force projection vertices (small inputs only).
    Oracle(RunConfig),
    /// Compare the enumerator against the brute-force oracle.
    Check(RunConfig),
    /// Time repeated enumerations of one or more inputs.
    Bench(BenchArgs),
    /// Write a generated polytope as `.ine`.
    Gen(GenArgs),
    /// Render the projection as SVG, or the support curve as CSV.
    Plot(RunConfig),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    #[arg(long)]
    pub input: PathBuf,
    /// Projection dimensions, 1-based.
    #[arg(long, value_parser = parse_dims, default_value = "1,2")]
    pub dims: (usize, usize),
    #[arg(long = "eps", default_value_t = 0.5)]
    pub epsilon_deg: f64,
    #[arg(long = "tol", default_value_t = 1e-9)]
    pub point_tol: f64,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long, default_value_t = 720)]
    pub samples: usize,
    #[arg(long, default_value_t = 100_000)]
    pub max_vertices: usize,
}

impl RunConfig {
    fn params(&self) -> EnumerationParams {
        EnumerationParams {
            epsilon_deg: self.epsilon_deg,
            point_tol: self.point_tol,
            max_vertices: self.max_vertices,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[arg(long, required = true)]
    pub input: Vec<PathBuf>,
    #[arg(long, value_parser = parse_dims, default_value = "1,2")]
    pub dims: (usize, usize),
    #[arg(long = "eps", default_value_t = 0.5)]
    pub epsilon_deg: f64,
    #[arg(long = "tol", default_value_t = 1e-9)]
    pub point_tol: f64,
    #[arg(long, default_value_t = 3)]
    pub repeat: usize,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Hypercube,
    Cross,
    Perm,
    Random,
}

#[derive(Debug, Clone, Args)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub family: Family,
    #[arg(long)]
    pub dim: Option<usize>,
    #[arg(long)]
    pub order: Option<usize>,
    /// Number of random half-spaces (before the bounding box).
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1.0)]
    pub half_width: f64,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

fn parse_dims(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected D1,D2, got '{s}'"))?;
    let a = a.trim().parse().map_err(|_| format!("bad dimension '{a}'"))?;
    let b = b.trim().parse().map_err(|_| format!("bad dimension '{b}'"))?;
    Ok((a, b))
}

/// A failed command: exit code plus message for the error stream.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => EXIT_PARSE,
            Error::ProjectionUnbounded { .. } | Error::EmptyPolytope => EXIT_UNBOUNDED_OR_EMPTY,
            Error::VertexBudgetExceeded { .. } => EXIT_BUDGET,
            _ => EXIT_FAILURE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: EXIT_FAILURE, message: e.to_string() }
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return e.exit_code();
        }
    };
    let result = match &cli.command {
        Command::Enumerate(cfg) => cmd_enumerate(cfg, out, err),
        Command::Oracle(cfg) => cmd_oracle(cfg, out),
        Command::Check(cfg) => cmd_check(cfg, out),
        Command::Bench(args) => cmd_bench(args, out, err),
        Command::Gen(args) => cmd_gen(args, out),
        Command::Plot(cfg) => cmd_plot(cfg, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn load(path: &Path) -> Result<HPolytope, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure { code: EXIT_FAILURE, message: format!("{}: {e}", path.display()) })?;
    Ok(parse_ine(&text)?)
}

fn plane_for(dims: (usize, usize), p: &HPolytope) -> Result<PlaneSpec, Failure> {
    Ok(PlaneSpec::new(dims.0, dims.1, p.dim())?)
}

fn emit(output: &Option<PathBuf>, out: &mut dyn Write, data: &str) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, data)?,
        None => out.write_all(data.as_bytes())?,
    }
    Ok(())
}

fn points_csv(points: &[Point2]) -> String {
    let mut s = String::from("x,y\n");
    for p in points {
        s.push_str(&format!("{:.16e},{:.16e}\n", p[0], p[1]));
    }
    s
}

fn cmd_enumerate(cfg: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let p = load(&cfg.input)?;
    let plane = plane_for(cfg.dims, &p)?;
    let report = enumerate_vertices(&p, plane, &cfg.params())?;
    let data = match cfg.format.unwrap_or(Format::Csv) {
        Format::Csv => write_vertices(&report, VertexFormat::Csv),
        Format::Json => write_vertices(&report, VertexFormat::Json),
        Format::Svg => polygon_svg(&report.result.points()),
    };
    emit(&cfg.output, out, &data)?;
    let _ = writeln!(
        err,
        "vertices={} lp_calls={} binsearch_iters={} wall_ms={:.3}",
        report.result.len(),
        report.lp_calls,
        report.binsearch_iters,
        report.wall_ms
    );
    Ok(EXIT_OK)
}

fn cmd_oracle(cfg: &RunConfig, out: &mut dyn Write) -> CmdResult {
    let p = load(&cfg.input)?;
    let plane = plane_for(cfg.dims, &p)?;
    let hull = oracle_projection_vertices(&p, plane)?;
    let data = match cfg.format.unwrap_or(Format::Csv) {
        Format::Svg => polygon_svg(&hull),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&hull).expect("points serialize");
            s.push('\n');
            s
        }
        Format::Csv => points_csv(&hull),
    };
    emit(&cfg.output, out, &data)?;
    Ok(EXIT_OK)
}

/// Outcome of comparing the enumerator with the oracle on one input.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub report: EnumerationReport,
    pub oracle: Vec<Point2>,
    pub matched: bool,
    pub max_distance: f64,
}

/// Runs both pipelines on `p` and compares the vertex cycles.
pub fn check_polytope(
    p: &HPolytope,
    plane: PlaneSpec,
    params: &EnumerationParams,
) -> crate::Result<CheckOutcome> {
    let report = enumerate_vertices(p, plane, params)?;
    let oracle = oracle_projection_vertices(p, plane)?;
    let cmp = compare_cycles(&report.result.points(), &oracle, CHECK_TOL);
    Ok(CheckOutcome { report, oracle, matched: cmp.matched, max_distance: cmp.max_distance })
}

fn cmd_check(cfg: &RunConfig, out: &mut dyn Write) -> CmdResult {
    let p = load(&cfg.input)?;
    let plane = plane_for(cfg.dims, &p)?;
    let outcome = check_polytope(&p, plane, &cfg.params())?;
    let found = outcome.report.result.points();
    writeln!(out, "enumerator_vertices={}", found.len())?;
    writeln!(out, "oracle_vertices={}", outcome.oracle.len())?;
    writeln!(out, "max_distance={:e}", outcome.max_distance)?;
    if outcome.matched {
        writeln!(out, "match")?;
        Ok(EXIT_OK)
    } else {
        writeln!(out, "MISMATCH")?;
        writeln!(out, "enumerator:")?;
        out.write_all(points_csv(&found).as_bytes())?;
        writeln!(out, "oracle:")?;
        out.write_all(points_csv(&outcome.oracle).as_bytes())?;
        Ok(EXIT_MISMATCH)
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct BenchRow {
    pub name: String,
    pub m: usize,
    pub n: usize,
    #[serde(rename = "V")]
    pub vertices: usize,
    pub lp_calls: u64,
    pub wall_ms_mean: f64,
    pub wall_ms_stddev: f64,
}

/// Enumerates `p` once as warmup and then `repeat` timed times.
pub fn bench_polytope(
    name: &str,
    p: &HPolytope,
    plane: PlaneSpec,
    params: &EnumerationParams,
    repeat: usize,
) -> crate::Result<BenchRow> {
    let warm = enumerate_vertices(p, plane, params)?;
    let mut times = Vec::with_capacity(repeat);
    for _ in 0..repeat {
        times.push(enumerate_vertices(p, plane, params)?.wall_ms);
    }
    let k = times.len() as f64;
    let mean = if times.is_empty() { warm.wall_ms } else { times.iter().sum::<f64>() / k };
    let stddev = if times.len() > 1 {
        (times.iter().map(|t| (t - mean).powi(2)).sum::<f64>() / (k - 1.0)).sqrt()
    } else {
        0.0
    };
    Ok(BenchRow {
        name: name.to_string(),
        m: p.num_constraints(),
        n: p.dim(),
        vertices: warm.result.len(),
        lp_calls: warm.lp_calls,
        wall_ms_mean: mean,
        wall_ms_stddev: stddev,
    })
}

fn cmd_bench(args: &BenchArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let params =
        EnumerationParams { epsilon_deg: args.epsilon_deg, point_tol: args.point_tol, ..Default::default() };
    let mut rows = Vec::new();
    for path in &args.input {
        let p = load(path)?;
        let plane = plane_for(args.dims, &p)?;
        let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        let row = bench_polytope(&name, &p, plane, &params, args.repeat)?;
        let _ = writeln!(err, "{}: V={} wall_ms={:.3}", row.name, row.vertices, row.wall_ms_mean);
        rows.push(row);
    }
    let mut s = serde_json::to_string_pretty(&rows).expect("rows serialize");
    s.push('\n');
    emit(&args.output, out, &s)?;
    Ok(EXIT_OK)
}

fn required(v: Option<usize>, flag: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure { code: EXIT_FAILURE, message: format!("missing --{flag}") })
}

fn cmd_gen(args: &GenArgs, out: &mut dyn Write) -> CmdResult {
    let (p, name) = match args.family {
        Family::Hypercube => {
            let n = required(args.dim, "dim")?;
            (make_hypercube(n, args.half_width)?, format!("hypercube{n}"))
        }
        Family::Cross => {
            let n = required(args.dim, "dim")?;
            (make_cross_polytope(n)?, format!("cross{n}"))
        }
        Family::Perm => {
            let d = required(args.order.or(args.dim), "order")?;
            (make_permutahedron(d)?, format!("perm{d}"))
        }
        Family::Random => {
            let n = required(args.dim, "dim")?;
            let m = required(args.m, "m")?;
            (make_random_bounded(n, m, args.seed)?, format!("random_n{n}_m{m}_s{}", args.seed))
        }
    };
    emit(&args.output, out, &write_ine(&p, &name))?;
    Ok(EXIT_OK)
}

fn cmd_plot(cfg: &RunConfig, out: &mut dyn Write) -> CmdResult {
    let p = load(&cfg.input)?;
    let plane = plane_for(cfg.dims, &p)?;
    let data = match cfg.format.unwrap_or(Format::Svg) {
        Format::Svg => {
            let report = enumerate_vertices(&p, plane, &cfg.params())?;
            polygon_svg(&report.result.points())
        }
        Format::Csv => curve_csv(&support_curve(&p, plane, cfg.samples.max(1))?),
        Format::Json => {
            return Err(Failure { code: EXIT_FAILURE, message: "plot supports --format svg or csv".into() })
        }
    };
    emit(&cfg.output, out, &data)?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims_parser() {
        assert_eq!(parse_dims("1,2"), Ok((1, 2)));
        assert_eq!(parse_dims(" 3 , 7"), Ok((3, 7)));
        assert!(parse_dims("1").is_err());
        assert!(parse_dims("a,2").is_err());
    }

    #[test]
    fn exit_code_mapping() {
        let code = |e: Error| Failure::from(e).code;
        assert_eq!(code(Error::Parse { line: 1, message: String::new() }), EXIT_PARSE);
        assert_eq!(code(Error::EmptyPolytope), EXIT_UNBOUNDED_OR_EMPTY);
        assert_eq!(code(Error::ProjectionUnbounded { theta_deg: 0.0 }), EXIT_UNBOUNDED_OR_EMPTY);
        assert_eq!(code(Error::VertexBudgetExceeded { max: 3 }), EXIT_BUDGET);
        assert_eq!(code(Error::NumericalBreakdown(String::new())), EXIT_FAILURE);
    }

    #[test]
    fn usage_errors_exit_2() {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        assert_eq!(run(["polyproj", "enumerate"], &mut o, &mut e), 2);
        assert_eq!(run(["polyproj", "frobnicate"], &mut o, &mut e), 2);
    }
}
