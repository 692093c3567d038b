//! The `jarnik` command line.
//!
//! Exit status 0 on success, 2 for argument errors (with usage text) and 1 for
//! failed computations or I/O. Files are written through a temporary file and
//! renamed into place. `JARNIK_THREADS` caps the worker pool.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};

use crate::analysis::{convergence_csv, convergence_table, DEFAULT_SAMPLES};
use crate::curvature::{curvature_trace, trace_csv, trace_svg, TraceMode};
use crate::domains::DomainSpec;
use crate::error::Result;
use crate::export::write_atomic;
use crate::limit_curves::LimitCurve;
use crate::number_theory::{RealSpec, Side};
use crate::polygon::{build_polygon, scale_polygon};

mod selftest;

pub use selftest::{selftest, SelftestItem};

#[derive(Parser, Debug)]
#[command(
    name = "jarnik",
    version,
    about = "Jarník polygons, their limit curves and local radii of curvature"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build P_Q(S) and write its vertices.
    Polygon(PolygonArgs),
    /// Sample the fundamental arc of a limit curve.
    LimitCurve(CurveArgs),
    /// Distance from scaled polygons to their limit curve over a list of Q.
    Converge(ConvergeArgs),
    /// Trace the scaled local radius of curvature over a range of Q.
    Curvature(CurvatureArgs),
    /// Run the built-in checks of known exact values.
    Selftest,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Incremental,
    Direct,
}

#[derive(Args, Debug)]
struct Output {
    /// Output file (written atomically); standard output if omitted.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct PolygonArgs {
    /// square, diamond, octagon:<delta> or ball:<p>.
    #[arg(long)]
    domain: DomainSpec,
    /// The order Q.
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
    q: i64,
    /// Write the scaled polygon instead of lattice coordinates.
    #[arg(long)]
    scaled: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct CurveArgs {
    /// C, C1, Cdelta:<delta> or Cp:<p>.
    #[arg(long)]
    curve: LimitCurve,
    /// Number of evenly spaced lambda values in [0, 1].
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(2..))]
    samples: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct ConvergeArgs {
    #[arg(long)]
    domain: DomainSpec,
    /// Limit curve; defaults to the one the domain's polygons converge to.
    #[arg(long)]
    curve: Option<LimitCurve>,
    /// Comma-separated orders.
    #[arg(long, value_delimiter = ',', required = true, value_parser = clap::value_parser!(i64).range(1..))]
    q_list: Vec<i64>,
    /// Points on the sampled fundamental arc.
    #[arg(long, default_value_t = DEFAULT_SAMPLES as u64, value_parser = clap::value_parser!(u64).range(1000..))]
    samples: u64,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug)]
struct CurvatureArgs {
    /// rat:a/b, surd:(P+sqrt(D))/Q, const:e-2, const:inv-sqrt3, cf:[0;...].
    #[arg(long, allow_hyphen_values = true)]
    lambda: RealSpec,
    /// For rational lambda: + (from above) or - (from below).
    #[arg(long, allow_hyphen_values = true)]
    side: Option<Side>,
    #[arg(long, value_parser = clap::value_parser!(i64).range(2..))]
    q_min: i64,
    #[arg(long, value_parser = clap::value_parser!(i64).range(2..))]
    q_max: i64,
    /// How R(Q) is computed along the range.
    #[arg(long, value_enum, default_value_t = Mode::Incremental)]
    mode: Mode,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[command(flatten)]
    out: Output,
}

/// The argument parser, for help rendering and introspection.
pub fn command() -> clap::Command {
    Cli::command()
}

fn usage_error(kind: ErrorKind, msg: impl std::fmt::Display) -> clap::Error {
    Cli::command().error(kind, msg)
}

/// Checks that need more than one argument; runs before any computation.
fn validate(cli: &Cli) -> std::result::Result<(), clap::Error> {
    match &cli.command {
        Command::Curvature(a) => {
            if a.q_max < a.q_min {
                return Err(usage_error(
                    ErrorKind::ValueValidation,
                    "--q-max must not be below --q-min",
                ));
            }
            if !a.lambda.in_open_unit_interval() {
                return Err(usage_error(ErrorKind::ValueValidation, "--lambda must lie in (0, 1)"));
            }
            if a.lambda.is_rational() && a.side.is_none() {
                return Err(usage_error(
                    ErrorKind::MissingRequiredArgument,
                    "a rational --lambda needs --side + or --side -",
                ));
            }
        }
        Command::Converge(a) => {
            if let Some(c) = &a.curve {
                if !c.pairs_with(&a.domain) {
                    return Err(usage_error(
                        ErrorKind::ValueValidation,
                        format!("polygons of {} do not converge to {c}", a.domain),
                    ));
                }
            }
        }
        _ => {}
    }
    Ok(())
}

fn thread_pool() -> std::result::Result<rayon::ThreadPool, String> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(v) = std::env::var_os("JARNIK_THREADS") {
        let n: usize = v
            .to_str()
            .and_then(|s| s.trim().parse().ok())
            .filter(|&n| n > 0)
            .ok_or_else(|| format!("JARNIK_THREADS must be a positive integer, got {v:?}"))?;
        b = b.num_threads(n);
    }
    b.build().map_err(|e| e.to_string())
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args).and_then(|c| validate(&c).map(|_| c)) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    if !text.contains("Usage:") {
                        let _ = writeln!(stderr, "\n{}", Cli::command().render_usage());
                    }
                    2
                }
            };
        }
    };
    let pool = match thread_pool() {
        Ok(p) => p,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            return 2;
        }
    };
    match pool
        .install(|| execute(cli.command))
        .and_then(|a| deliver(&a, stdout).map(|_| a.code))
    {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}

/// What a command produced: text, where it goes, and the exit status.
struct Artifact {
    text: String,
    path: Option<PathBuf>,
    code: i32,
}

impl Artifact {
    fn to(out: Output, text: String) -> Self {
        Artifact {
            text,
            path: out.output,
            code: 0,
        }
    }
}

fn execute(command: Command) -> Result<Artifact> {
    let artifact = match command {
        Command::Polygon(a) => {
            let p = build_polygon(&a.domain, a.q)?;
            let text = match (a.format, a.scaled) {
                (Format::Csv, false) => p.to_csv(),
                (Format::Csv, true) => scale_polygon(&p)?.to_csv(),
                (Format::Svg, _) => scale_polygon(&p)?.to_svg(),
            };
            Artifact::to(a.out, text)
        }
        Command::LimitCurve(a) => {
            let n = a.samples as usize;
            let text = match a.format {
                Format::Csv => a.curve.arc_csv(n)?,
                Format::Svg => a.curve.curve_svg(n)?,
            };
            Artifact::to(a.out, text)
        }
        Command::Converge(a) => {
            let curve = a.curve.unwrap_or_else(|| LimitCurve::for_domain(&a.domain));
            let rows = convergence_table(&a.domain, &a.q_list, &curve, a.samples as usize)?;
            Artifact::to(a.out, convergence_csv(&rows))
        }
        Command::Curvature(a) => {
            let mode = match a.mode {
                Mode::Incremental => TraceMode::Incremental,
                Mode::Direct => TraceMode::Direct,
            };
            let trace = curvature_trace(&a.lambda, a.side, a.q_min, a.q_max, mode)?;
            let text = match a.format {
                Format::Csv => trace_csv(&trace),
                Format::Svg => {
                    let label = match a.side {
                        Some(s) => format!("{}{s}", a.lambda),
                        None => a.lambda.to_string(),
                    };
                    trace_svg(&trace, a.lambda.to_f64(), &label)
                }
            };
            Artifact::to(a.out, text)
        }
        Command::Selftest => {
            let items = selftest();
            let failed = items.iter().filter(|i| !i.passed).count();
            let mut text = String::new();
            for item in &items {
                text.push_str(&format!("{item}\n"));
            }
            text.push_str(&format!("{} of {} checks passed\n", items.len() - failed, items.len()));
            Artifact {
                text,
                path: None,
                code: i32::from(failed > 0),
            }
        }
    };
    Ok(artifact)
}

fn deliver(artifact: &Artifact, stdout: &mut dyn Write) -> Result<()> {
    match &artifact.path {
        Some(path) => write_atomic(path, artifact.text.as_bytes()),
        None => Ok(stdout.write_all(artifact.text.as_bytes())?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("jarnik").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn polygon_csv() {
        let (code, out, _) = call(&["polygon", "--domain", "square", "--q", "4", "--format", "csv"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 49);
        assert!(out.starts_with("x,y\n0,0\n4,1\n7,2\n9,3\n12,5\n16,8\n17,9\n"));
        assert!(out.ends_with("-1,0\n"));
    }

    #[test]
    fn argument_errors_exit_2() {
        for args in [
            &["polygon", "--domain", "circle", "--q", "4"][..],
            &["polygon", "--domain", "square", "--q", "0"],
            &["polygon", "--domain", "square"],
            &["limit-curve", "--curve", "Cp:0"],
            &["limit-curve", "--curve", "C", "--samples", "1"],
            &["curvature", "--lambda", "rat:1/2", "--q-min", "10", "--q-max", "20"],
            &[
                "curvature",
                "--lambda",
                "const:inv-sqrt3",
                "--q-min",
                "20",
                "--q-max",
                "10",
            ],
            &[
                "curvature",
                "--lambda",
                "rat:3/2",
                "--side",
                "+",
                "--q-min",
                "10",
                "--q-max",
                "20",
            ],
            &["converge", "--domain", "diamond", "--curve", "C", "--q-list", "10"],
            &["converge", "--domain", "diamond", "--q-list", "10", "--samples", "10"],
            &["nonsense"],
            &[],
        ] {
            let (code, _, err) = call(args);
            assert_eq!(code, 2, "{args:?}");
            assert!(err.contains("Usage:"), "{args:?}: {err}");
        }
    }

    #[test]
    fn help_exits_0() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("curvature"));
    }

    #[test]
    fn every_flag_is_documented() {
        let mut root = command();
        for sub in root.get_subcommands_mut() {
            let name = sub.get_name().to_string();
            let ids: Vec<String> = sub
                .get_arguments()
                .filter_map(|a| a.get_long().map(str::to_string))
                .collect();
            let (code, out, _) = call(&[name.as_str(), "--help"]);
            assert_eq!(code, 0);
            for id in ids {
                assert!(out.contains(&format!("--{id}")), "{name} --help lacks --{id}");
            }
        }
    }

    #[test]
    fn limit_curve_circle() {
        let (code, out, _) = call(&["limit-curve", "--curve", "Cp:2", "--samples", "100", "--format", "csv"]);
        assert_eq!(code, 0);
        let rows: Vec<&str> = out.lines().collect();
        assert_eq!(rows[0], "lambda,x,y");
        assert_eq!(rows.len(), 101);
        for r in &rows[1..] {
            let v: Vec<f64> = r.split(',').map(|t| t.parse().unwrap()).collect();
            assert!((v[1].hypot(v[2]) - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn side_accepts_minus_sign() {
        let (code, out, err) = call(&[
            "curvature",
            "--lambda",
            "rat:1/2",
            "--side",
            "-",
            "--q-min",
            "4",
            "--q-max",
            "4",
        ]);
        assert_eq!(code, 0, "{err}");
        assert!(out.lines().nth(1).unwrap().starts_with("4,3,2,725,2,"), "{out}");
    }

    #[test]
    fn output_file_and_determinism() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("trace.csv");
        let p = path.to_str().unwrap();
        let args = [
            "curvature",
            "--lambda",
            "const:e-2",
            "--q-min",
            "2",
            "--q-max",
            "300",
            "--output",
            p,
        ];
        assert_eq!(call(&args).0, 0);
        let first = std::fs::read(&path).unwrap();
        assert_eq!(call(&args).0, 0);
        assert_eq!(std::fs::read(&path).unwrap(), first);
        let (_, direct, _) = call(&[
            "curvature",
            "--lambda",
            "const:e-2",
            "--q-min",
            "2",
            "--q-max",
            "300",
            "--mode",
            "direct",
        ]);
        assert_eq!(direct.as_bytes(), &first[..]);
    }

    #[test]
    fn io_failure_exits_1() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("missing").join("out.csv");
        let (code, _, err) = call(&[
            "polygon",
            "--domain",
            "square",
            "--q",
            "3",
            "--output",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code, 1);
        assert!(err.starts_with("error:"));
        assert!(!path.exists());
    }
}
