//! The `le-kit` command line.
//!
//! Exit codes: 0 success, 1 verification failed, 2 usage error, 3 domain
//! error, 4 I/O error. Data goes to stdout (or `--out`), diagnostics to
//! stderr. Output is a pure function of the arguments.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use le_kit::figures;
use le_kit::regimes::{Interval, Root};
use le_kit::{
    build, check_closed_form, classify, critical_case, CheckConfig, CriticalCase, RegimeLabel,
    RegimeReport, Sign, Signs, Spacing,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "le-kit",
    version,
    about = "Closed-form solutions of the critical Lane-Emden equation"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format (default: text, or csv for trace and figure).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify the regime of the potential polynomial at constant C.
    Classify(CaseArgs),
    /// Evaluate the closed-form solution at one point.
    Eval {
        #[command(flatten)]
        sol: SolutionArgs,
        /// Point x > 0
        #[arg(long)]
        x: f64,
    },
    /// Sample the closed-form solution on a grid.
    Trace {
        #[command(flatten)]
        sol: SolutionArgs,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Check the closed form against the radial equation.
    Verify {
        #[command(flatten)]
        sol: SolutionArgs,
        #[command(flatten)]
        grid: VerifyGridArgs,
        /// Bound on the relative residual.
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Emit plot data.
    Figure {
        #[command(subcommand)]
        which: FigureKind,
    },
}

#[derive(Debug, Subcommand)]
pub enum FigureKind {
    /// w43(z) for d = 4 at C ∈ {−2, −1, −0.5, 0, 1}.
    W43,
    /// w62(z) for d = 6 at the same constants.
    W62,
    /// Every solution family at B = 1 over log-spaced x.
    Solutions {
        #[arg(long)]
        d: i64,
    },
}

#[derive(Debug, Clone, Args)]
pub struct CaseArgs {
    /// Dimension: 3, 4 or 6
    #[arg(long)]
    pub d: i64,
    /// Polynomial constant C
    #[arg(long = "C", allow_negative_numbers = true)]
    pub c: f64,
}

#[derive(Debug, Clone, Args)]
pub struct SolutionArgs {
    #[command(flatten)]
    pub case: CaseArgs,
    /// Integration constant B (> 0); it shifts the solution along ln x.
    #[arg(long = "B", default_value_t = 1.0, allow_negative_numbers = true)]
    pub b: f64,
    /// Outer sign of θ.
    #[arg(long, default_value = "+", value_parser = parse_sign, allow_hyphen_values = true)]
    pub sign: Sign,
    /// Sign of the elliptic-function argument.
    #[arg(long = "sign-arg", default_value = "+", value_parser = parse_sign, allow_hyphen_values = true)]
    pub sign_arg: Sign,
}

#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    /// Left end of the x window
    #[arg(long = "x-min", default_value_t = 0.01)]
    pub x_min: f64,
    /// Right end of the x window
    #[arg(long = "x-max", default_value_t = 100.0)]
    pub x_max: f64,
    /// Number of grid points
    #[arg(long, default_value_t = 200)]
    pub n: usize,
    /// Grid spacing
    #[arg(long, value_enum, default_value = "log")]
    pub spacing: SpacingArg,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyGridArgs {
    /// Left end of the x window
    #[arg(long = "x-min", default_value_t = 0.05)]
    pub x_min: f64,
    /// Right end of the x window
    #[arg(long = "x-max", default_value_t = 20.0)]
    pub x_max: f64,
    /// Number of grid points
    #[arg(long, default_value_t = 200)]
    pub n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpacingArg {
    Log,
    Linear,
}

impl From<SpacingArg> for Spacing {
    fn from(s: SpacingArg) -> Self {
        match s {
            SpacingArg::Log => Spacing::Log,
            SpacingArg::Linear => Spacing::Linear,
        }
    }
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    match s {
        "+" | "plus" | "+1" | "1" => Ok(Sign::Plus),
        "-" | "minus" | "-1" => Ok(Sign::Minus),
        _ => Err(format!("expected + or -, got {s:?}")),
    }
}

/// What `eval` reports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub d: i64,
    #[serde(rename = "C")]
    pub c: f64,
    #[serde(rename = "B")]
    pub b: f64,
    pub family: String,
    pub x: f64,
    pub theta: f64,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
    Io(String),
}

impl From<le_kit::Error> for Failure {
    fn from(e: le_kit::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

/// Output plus whether a verification failed.
struct Rendered {
    body: String,
    verify_failed: bool,
}

impl From<String> for Rendered {
    fn from(body: String) -> Self {
        Rendered {
            body,
            verify_failed: false,
        }
    }
}

fn finite(name: &str, v: f64) -> Result<(), Failure> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Failure::Usage(format!("--{name} must be finite, got {v}")))
    }
}

fn validate_window(x_min: f64, x_max: f64, n: usize) -> Result<(), Failure> {
    finite("x-min", x_min)?;
    finite("x-max", x_max)?;
    if !(x_min > 0.0 && x_max > x_min) {
        return Err(Failure::Usage(format!(
            "need 0 < --x-min < --x-max, got {x_min} and {x_max}"
        )));
    }
    if n < 2 {
        return Err(Failure::Usage(format!("--n must be at least 2, got {n}")));
    }
    Ok(())
}

fn validate(cli: &Cli) -> Result<(), Failure> {
    let sol_args = |s: &SolutionArgs| -> Result<(), Failure> {
        finite("C", s.case.c)?;
        finite("B", s.b)
    };
    let allowed: &[Format] = match &cli.command {
        Command::Classify(a) => {
            finite("C", a.c)?;
            &[Format::Text, Format::Json]
        }
        Command::Eval { sol, x } => {
            sol_args(sol)?;
            finite("x", *x)?;
            &[Format::Text, Format::Json]
        }
        Command::Trace { sol, grid } => {
            sol_args(sol)?;
            validate_window(grid.x_min, grid.x_max, grid.n)?;
            &[Format::Text, Format::Csv, Format::Json]
        }
        Command::Verify { sol, grid, tol } => {
            sol_args(sol)?;
            validate_window(grid.x_min, grid.x_max, grid.n)?;
            if !(*tol > 0.0 && tol.is_finite()) {
                return Err(Failure::Usage(format!("--tol must be positive, got {tol}")));
            }
            &[Format::Text, Format::Json]
        }
        Command::Figure { .. } => &[Format::Text, Format::Csv, Format::Json],
    };
    match cli.format {
        Some(f) if !allowed.contains(&f) => Err(Failure::Usage(
            format!("--format {f:?} is not available for this subcommand").to_lowercase(),
        )),
        _ => Ok(()),
    }
}

fn case_for(d: i64) -> Result<CriticalCase, Failure> {
    Ok(critical_case(d)?)
}

fn signs(s: &SolutionArgs) -> Signs {
    Signs {
        outer: s.sign,
        arg: s.sign_arg,
    }
}

fn fmt_roots(roots: &[Root]) -> String {
    let parts: Vec<String> = roots
        .iter()
        .map(|r| match r.multiplicity {
            1 => format!("{}", r.value),
            m => format!("{} (x{m})", r.value),
        })
        .collect();
    if parts.is_empty() {
        "none".to_string()
    } else {
        parts.join(", ")
    }
}

fn fmt_intervals(ivs: &[Interval]) -> String {
    let parts: Vec<String> = ivs
        .iter()
        .map(|iv| match iv.lo {
            None => format!("(-inf, {}]", iv.hi),
            Some(lo) if iv.is_point() => format!("{{{lo}}}"),
            Some(lo) => format!("[{lo}, {}]", iv.hi),
        })
        .collect();
    if parts.is_empty() {
        "empty".to_string()
    } else {
        parts.join(" u ")
    }
}

fn render_classify(report: &RegimeReport) -> String {
    let mut out = String::new();
    writeln!(out, "d = {}, C = {}", report.case.d(), report.c).unwrap();
    writeln!(out, "label: {:?}", report.label).unwrap();
    writeln!(out, "roots: {}", fmt_roots(&report.roots)).unwrap();
    writeln!(out, "admissible z: {}", fmt_intervals(&report.intervals)).unwrap();
    if let Some(note) = &report.note {
        writeln!(out, "note: {note}").unwrap();
    }
    out
}

fn json_line<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn execute(cli: &Cli) -> Result<Rendered, Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Classify(a) => {
            let case = case_for(a.d)?;
            let report = classify(&case, a.c)?;
            log::info!("classified d = {}, C = {} as {:?}", a.d, a.c, report.label);
            if report.label == RegimeLabel::NoRealSolution {
                return Err(Failure::Domain(format!(
                    "no real solutions for d = {}, C = {} (w is negative everywhere)",
                    a.d, a.c
                )));
            }
            Ok(match format {
                Some(Format::Json) => json_line(&report),
                _ => render_classify(&report),
            }
            .into())
        }
        Command::Eval { sol, x } => {
            let case = case_for(sol.case.d)?;
            let s = build(&case, sol.case.c, sol.b, signs(sol))?;
            let theta = s.eval(*x)?;
            let report = EvalReport {
                d: sol.case.d,
                c: sol.case.c,
                b: sol.b,
                family: s.family_name().to_string(),
                x: *x,
                theta,
            };
            Ok(match format {
                Some(Format::Json) => json_line(&report),
                _ => format!("{theta}\n"),
            }
            .into())
        }
        Command::Trace { sol, grid } => {
            let case = case_for(sol.case.d)?;
            let s = build(&case, sol.case.c, sol.b, signs(sol))?;
            let tr = s.trace(grid.x_min, grid.x_max, grid.n, grid.spacing.into())?;
            if tr.gap_count() > 0 {
                log::info!("trace has {} gaps", tr.gap_count());
            }
            Ok(match format {
                Some(Format::Json) => {
                    let mut j = tr.to_json();
                    j.push('\n');
                    j
                }
                _ => tr.to_csv(),
            }
            .into())
        }
        Command::Verify { sol, grid, tol } => {
            let case = case_for(sol.case.d)?;
            let s = build(&case, sol.case.c, sol.b, signs(sol))?;
            let cfg = CheckConfig {
                residual_tol: *tol,
                ..CheckConfig::default()
            };
            let r = check_closed_form(&s, (grid.x_min, grid.x_max), grid.n, &cfg)?;
            log::debug!("{r:?}");
            let body = match format {
                Some(Format::Json) => json_line(&r),
                _ => {
                    let mut out = String::new();
                    writeln!(out, "family: {}", r.family).unwrap();
                    writeln!(out, "d = {}, C = {}, B = {}", r.d, r.expected_c, sol.b).unwrap();
                    writeln!(out, "max_residual: {:e}", r.max_residual).unwrap();
                    writeln!(out, "recovered_C: {}", r.recovered_c).unwrap();
                    writeln!(out, "points: {}/{}", r.points_used, r.points_total).unwrap();
                    writeln!(out, "result: {}", if r.passed { "PASS" } else { "FAIL" }).unwrap();
                    out
                }
            };
            Ok(Rendered {
                body,
                verify_failed: !r.passed,
            })
        }
        Command::Figure { which } => {
            let json = format == Some(Format::Json);
            let body = match which {
                FigureKind::W43 | FigureKind::W62 => {
                    let d = if matches!(which, FigureKind::W43) {
                        4
                    } else {
                        6
                    };
                    let case = case_for(d)?;
                    if json {
                        json_line(&figures::potential_rows(&case)?)
                    } else {
                        figures::potential_csv(&case)?
                    }
                }
                FigureKind::Solutions { d } => {
                    let case = case_for(*d)?;
                    if json {
                        json_line(&figures::solution_rows(&case)?)
                    } else {
                        figures::solutions_csv(&case)?
                    }
                }
            };
            Ok(body.into())
        }
    }
}

fn emit(cli: &Cli, body: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => stdout
            .write_all(body.as_bytes())
            .and_then(|_| stdout.flush())
            .map_err(|e| Failure::Io(format!("cannot write to stdout: {e}"))),
    }
}

/// Runs one invocation and returns its exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = stdout.write_all(text.as_bytes());
                return EXIT_OK;
            }
            let _ = stderr.write_all(text.as_bytes());
            return EXIT_USAGE;
        }
    };
    let outcome = validate(&cli)
        .and_then(|_| execute(&cli))
        .and_then(|r| emit(&cli, &r.body, stdout).map(|_| r.verify_failed));
    match outcome {
        Ok(false) => EXIT_OK,
        Ok(true) => EXIT_VERIFY_FAILED,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (EXIT_USAGE, format!("usage error: {m}")),
                Failure::Domain(m) => (EXIT_DOMAIN, m),
                Failure::Io(m) => (EXIT_IO, m),
            };
            let _ = writeln!(stderr, "le-kit: {msg}");
            code
        }
    }
}
