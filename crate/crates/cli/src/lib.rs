//! Command-line front end for the `supersym` library.
//!
//! [`run`] takes an argument vector and returns the exit code together with
//! everything written to stdout and stderr, so the binary is a thin wrapper.

pub mod parse;

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use supersym::geometry::{closure, isotropic_roots, nullstellensatz_check, vanishing_basis};
use supersym::membership::{graded_basis, is_supersymmetric_additive, is_supersymmetric_laurent, power_sum};
use supersym::{ClosureOptions, LaurentPoly, Mode, Point, Scalar, Signature, SuperalgebraicSet, Verdict};
use thiserror::Error;

pub use parse::{parse_poly, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NON_MEMBER: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NON_CONVERGENCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "supersym",
    version,
    about = "Supersymmetric polynomials and superalgebraic sets for gl(m|n)"
)]
struct Cli {
    /// Size of the even block (x variables).
    #[arg(long, global = true)]
    m: Option<usize>,
    /// Size of the odd block (y variables).
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Emit JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Poly,
    Laurent,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Poly => Mode::Polynomial,
            ModeArg::Laurent => Mode::Laurent,
        }
    }
}

#[derive(Debug, Args)]
struct ClosureArgs {
    /// JSON list of points, inline or as @file.
    #[arg(long)]
    points: String,
    /// Use only the root translations, without the Weyl group.
    #[arg(long)]
    no_weyl: bool,
    #[arg(long, default_value_t = ClosureOptions::default().max_subspaces)]
    max_subspaces: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide membership of an expression.
    Check {
        #[arg(long, value_enum, default_value = "poly")]
        mode: ModeArg,
        #[arg(long)]
        expr: String,
    },
    /// Basis of the supersymmetric polynomials of one degree.
    Basis {
        #[arg(long)]
        degree: usize,
    },
    /// Smallest superalgebraic set containing the given points.
    Closure(ClosureArgs),
    /// Closure of a single point.
    Orbit(ClosureArgs),
    /// The isotropic roots.
    Roots,
    /// The power sum p_r.
    Powersum {
        #[arg(long, allow_negative_numbers = true)]
        r: i64,
        #[arg(long, value_enum, default_value = "poly")]
        mode: ModeArg,
    },
    /// Supersymmetric polynomials up to a degree vanishing on a set.
    Vanish {
        /// Superalgebraic set JSON, inline or as @file.
        #[arg(long)]
        set: String,
        #[arg(long)]
        degree: usize,
    },
    /// Compare the zeros of the truncated maximal ideal at a point with its closure.
    Nullcheck {
        #[arg(long)]
        point: String,
        #[arg(long)]
        degree: usize,
        /// JSON list of grid points, inline or as @file.
        #[arg(long)]
        grid: String,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] supersym::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(supersym::Error::NonConvergence { .. }) => EXIT_NON_CONVERGENCE,
            _ => EXIT_USAGE,
        }
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn signature(cli: &Cli) -> Result<Signature, CliError> {
    match (cli.m, cli.n) {
        (Some(m), Some(n)) => Ok(Signature::new(m, n)),
        _ => Err(CliError::Usage("both --m and --n are required".into())),
    }
}

fn read_input(arg: &str) -> Result<String, CliError> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

fn from_json<T: serde::de::DeserializeOwned>(arg: &str, what: &str) -> Result<T, CliError> {
    serde_json::from_str(&read_input(arg)?).map_err(|e| CliError::Usage(format!("invalid {what} JSON: {e}")))
}

fn points_arg(arg: &str, sig: Signature) -> Result<Vec<Point>, CliError> {
    let points: Vec<Point> = from_json(arg, "points")?;
    for p in &points {
        p.check(sig)?;
    }
    Ok(points)
}

/// A single point, given either as an object or as a one-element list.
fn point_arg(arg: &str, sig: Signature) -> Result<Point, CliError> {
    #[derive(serde::Deserialize)]
    #[serde(untagged)]
    enum OneOrList {
        One(Point),
        List(Vec<Point>),
    }
    let p = match from_json(arg, "point")? {
        OneOrList::One(p) => p,
        OneOrList::List(mut v) if v.len() == 1 => v.remove(0),
        OneOrList::List(v) => return Err(CliError::Usage(format!("expected one point, got {}", v.len()))),
    };
    p.check(sig)?;
    Ok(p)
}

fn json_line<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("output types serialize");
    s.push('\n');
    s
}

fn fmt_coords(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn fmt_set(s: &SuperalgebraicSet) -> String {
    let mut out = format!("{} subspace(s) in {}\n", s.len(), s.signature());
    for a in s.subspaces() {
        let dirs: Vec<String> = a.directions().row_vecs().iter().map(|d| fmt_coords(d)).collect();
        if dirs.is_empty() {
            let _ = writeln!(out, "  point {}", fmt_coords(a.base()));
        } else {
            let _ = writeln!(out, "  {} + span{{{}}}", fmt_coords(a.base()), dirs.join(", "));
        }
    }
    out
}

fn fmt_verdict(v: &Verdict) -> String {
    if v.member {
        "member\n".into()
    } else if v.failed_invariance {
        "not a member: not W-invariant\n".into()
    } else {
        let mut s = String::from("not a member");
        if let Some((i, j)) = v.failing_root {
            let _ = write!(s, ": fails at root eps{i} - delta{j}");
        }
        if let Some(r) = &v.residual {
            let _ = write!(s, "; residual {r}");
        }
        s.push('\n');
        s
    }
}

fn fmt_polys(polys: &[LaurentPoly]) -> String {
    polys.iter().map(|f| format!("{f}\n")).collect()
}

#[derive(Serialize)]
struct BasisOut<'a> {
    signature: Signature,
    degree: usize,
    basis: &'a [String],
}

#[derive(Serialize)]
struct RootOut {
    i: usize,
    j: usize,
    sign: i8,
    vector: Vec<Scalar>,
}

#[derive(Serialize)]
struct PolyOut {
    signature: Signature,
    mode: Mode,
    poly: String,
}

fn dispatch(cli: &Cli) -> Result<(i32, String), CliError> {
    let sig = signature(cli)?;
    let json = cli.json;
    match &cli.command {
        Command::Check { mode, expr } => {
            let f = parse_poly(expr, sig, (*mode).into())?;
            let v = match f.mode() {
                Mode::Polynomial => is_supersymmetric_additive(&f)?,
                Mode::Laurent => is_supersymmetric_laurent(&f)?,
            };
            let code = if v.member { EXIT_OK } else { EXIT_NON_MEMBER };
            Ok((code, if json { json_line(&v) } else { fmt_verdict(&v) }))
        }
        Command::Basis { degree } => {
            let basis = graded_basis(sig, *degree);
            let text: Vec<String> = basis.iter().map(LaurentPoly::render).collect();
            let out = if json {
                json_line(&BasisOut {
                    signature: sig,
                    degree: *degree,
                    basis: &text,
                })
            } else {
                format!("degree {degree}, dimension {}\n{}", basis.len(), fmt_polys(&basis))
            };
            Ok((EXIT_OK, out))
        }
        Command::Closure(args) => {
            let points = points_arg(&args.points, sig)?;
            run_closure(sig, &points, args, json)
        }
        Command::Orbit(args) => {
            let p = point_arg(&args.points, sig)?;
            run_closure(sig, &[p], args, json)
        }
        Command::Roots => {
            let roots = isotropic_roots(sig);
            let out = if json {
                let rs = roots
                    .iter()
                    .map(|r| {
                        Ok(RootOut {
                            i: r.i,
                            j: r.j,
                            sign: r.sign,
                            vector: r.vector(sig)?,
                        })
                    })
                    .collect::<Result<Vec<_>, supersym::Error>>()?;
                json_line(&rs)
            } else {
                let mut s = format!("{} isotropic root(s) in {sig}\n", roots.len());
                for r in &roots {
                    let _ = writeln!(s, "  {r}  {}", fmt_coords(&r.vector(sig)?));
                }
                s
            };
            Ok((EXIT_OK, out))
        }
        Command::Powersum { r, mode } => {
            let mode: Mode = (*mode).into();
            let p = power_sum(*r, sig, mode)?;
            let out = if json {
                json_line(&PolyOut {
                    signature: sig,
                    mode,
                    poly: p.render(),
                })
            } else {
                format!("{p}\n")
            };
            Ok((EXIT_OK, out))
        }
        Command::Vanish { set, degree } => {
            let s: SuperalgebraicSet = from_json(set, "set")?;
            if s.signature() != sig {
                return Err(CliError::Usage(format!(
                    "set has signature {}, but --m/--n give {sig}",
                    s.signature()
                )));
            }
            let basis = vanishing_basis(&s, *degree);
            let text: Vec<String> = basis.iter().map(LaurentPoly::render).collect();
            let out = if json {
                json_line(&BasisOut {
                    signature: sig,
                    degree: *degree,
                    basis: &text,
                })
            } else {
                format!("degree <= {degree}, dimension {}\n{}", basis.len(), fmt_polys(&basis))
            };
            Ok((EXIT_OK, out))
        }
        Command::Nullcheck { point, degree, grid } => {
            let p = point_arg(point, sig)?;
            let grid = points_arg(grid, sig)?;
            let report = nullstellensatz_check(sig, &p, *degree, &grid, ClosureOptions::default())?;
            let out = if json {
                json_line(&report)
            } else {
                let mut s = format!(
                    "point {} in {sig}, degree <= {degree}, {} ideal generator(s)\n",
                    fmt_coords(&p.coords),
                    report.basis.len()
                );
                for e in &report.entries {
                    let tag = if e.is_violation() {
                        "  VIOLATION"
                    } else if e.is_mismatch() {
                        "  (zero outside closure)"
                    } else {
                        ""
                    };
                    let _ = writeln!(
                        s,
                        "  {}: vanishes={} in_closure={}{tag}",
                        fmt_coords(&e.point.coords),
                        e.vanishes,
                        e.in_closure
                    );
                }
                let _ = writeln!(
                    s,
                    "violations: {}, mismatches: {}",
                    report.violations, report.mismatches
                );
                s
            };
            Ok((EXIT_OK, out))
        }
    }
}

fn run_closure(sig: Signature, points: &[Point], args: &ClosureArgs, json: bool) -> Result<(i32, String), CliError> {
    let s = SuperalgebraicSet::from_points(sig, points)?;
    let opts = ClosureOptions {
        include_weyl: !args.no_weyl,
        max_subspaces: args.max_subspaces,
    };
    let c = closure(&s, opts)?;
    Ok((EXIT_OK, if json { json_line(&c) } else { fmt_set(&c) }))
}
