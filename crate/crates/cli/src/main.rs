//! Command-line front end for the fuzzy-tuple library: arithmetic,
//! equation solving, curve sampling, fitting, and chart-coordinate
//! conversion over the `<x; d-, d+, mu-, mu+>` literal grammar.

mod literal;

use clap::{Parser, Subcommand, ValueEnum};
use gpdmf::coords::{coord_distance, from_coords, to_coords, CoordVector};
use gpdmf::membership::{from_tri_control, sample, ControlPoint, TriControlForm};
use gpdmf::solvers::{solve_linear_fuzzy, solve_linear_real, solve_quadratic, SolveStatus};
use gpdmf::{FuzzyNumber, Tolerance};
use literal::{format_fuzzy, format_real, parse_control_point, parse_fuzzy, parse_real};
use serde::Serialize;
use std::fmt;

/// Like `outln!`, but a closed stdout (e.g. the reader side of
/// `gpdmf ... | head` going away) ends the process quietly instead of
/// panicking.
macro_rules! outln {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let mut out = std::io::stdout().lock();
        if writeln!(out, $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

/// Like `eprintln!`, but a dead stderr is ignored: diagnostics are
/// best-effort, and there is no channel left to complain on.
macro_rules! errln {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stderr().lock(), $($arg)*);
    }};
}

#[derive(Parser)]
#[command(
    name = "gpdmf",
    version,
    about = "Fuzzy-number calculator over <x; d-, d+, mu-, mu+> tuples",
    propagate_version = true
)]
struct Cli {
    /// Significant digits for printed numbers (JSON always carries full
    /// precision)
    #[arg(
        long,
        global = true,
        default_value_t = 12,
        value_parser = clap::value_parser!(u8).range(1..=17)
    )]
    digits: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Arithmetic on fuzzy tuples
    Op {
        #[command(subcommand)]
        op: OpCommand,
    },
    /// Solve fuzzy equations
    Solve {
        #[command(subcommand)]
        equation: SolveCommand,
    },
    /// Sample a membership curve over its support
    Sample {
        /// Fuzzy literal, e.g. "<1; 2, 1, 0.5, 1>"
        fuzzy: String,
        /// Number of evenly spaced grid points (the exact peak is appended
        /// if the grid misses it)
        #[arg(long, default_value_t = 101)]
        points: usize,
        /// Widen the sampled range past the support on both sides
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        margin: f64,
        #[arg(long, value_enum, default_value_t = SampleFormat::Csv)]
        format: SampleFormat,
    },
    /// Build a tuple from a support triple a < b < c and one control point
    /// per flank
    Fit {
        /// Left support end
        #[arg(allow_hyphen_values = true)]
        a: String,
        /// Peak location
        #[arg(allow_hyphen_values = true)]
        b: String,
        /// Right support end
        #[arg(allow_hyphen_values = true)]
        c: String,
        /// Control point on the left flank, written x:y
        #[arg(allow_hyphen_values = true)]
        p: String,
        /// Control point on the right flank, written x:y
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Convert between tuples and their five chart coordinates
    Coords {
        #[command(subcommand)]
        direction: CoordsCommand,
    },
}

#[derive(Subcommand)]
enum OpCommand {
    /// a + b
    Add { a: String, b: String },
    /// a - b
    Sub { a: String, b: String },
    /// a * b
    Mul { a: String, b: String },
    /// a / b (b must be a unit)
    Div { a: String, b: String },
    /// lambda * f for a real scalar lambda
    Scale {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        f: String,
    },
    /// -f
    Neg { f: String },
    /// f^-1 (f must be a unit)
    Inv { f: String },
    /// f^n for a whole number n
    Pow { f: String, n: u32 },
}

#[derive(Subcommand)]
enum SolveCommand {
    /// Solve a x + b = c for a nonzero real a
    LinearReal {
        #[arg(allow_hyphen_values = true)]
        a: String,
        b: String,
        c: String,
        #[arg(long)]
        json: bool,
    },
    /// Solve a x + b = c for a unit fuzzy coefficient a
    LinearFuzzy {
        a: String,
        b: String,
        c: String,
        #[arg(long)]
        json: bool,
    },
    /// Solve a x^2 + b x + c = 0 (all verified solutions are listed)
    Quadratic {
        a: String,
        b: String,
        c: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum CoordsCommand {
    /// Map a tuple to its five chart coordinates
    To { fuzzy: String },
    /// Build the tuple with the given chart coordinates
    From {
        #[arg(allow_hyphen_values = true)]
        c1: String,
        #[arg(allow_hyphen_values = true)]
        c2: String,
        #[arg(allow_hyphen_values = true)]
        c3: String,
        #[arg(allow_hyphen_values = true)]
        c4: String,
        #[arg(allow_hyphen_values = true)]
        c5: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SampleFormat {
    Csv,
    Json,
}

#[derive(Debug)]
enum AppError {
    Parse(literal::ParseError),
    Core(gpdmf::Error),
}

impl fmt::Display for AppError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AppError::Parse(e) => write!(f, "{e}"),
            AppError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<literal::ParseError> for AppError {
    fn from(e: literal::ParseError) -> Self {
        AppError::Parse(e)
    }
}

impl From<gpdmf::Error> for AppError {
    fn from(e: gpdmf::Error) -> Self {
        AppError::Core(e)
    }
}

/// 0 success, 2 any validation or parse failure, 3 inversion of a
/// non-unit, 4 equation with no real solution.
fn exit_code(e: &AppError) -> i32 {
    match e {
        AppError::Core(gpdmf::Error::NotAUnit { .. }) => 3,
        _ => 2,
    }
}

const EXIT_NO_REAL_SOLUTION: i32 = 4;

#[derive(Serialize)]
struct FuzzyDto {
    x: f64,
    d_minus: f64,
    d_plus: f64,
    mu_minus: f64,
    mu_plus: f64,
}

impl From<&FuzzyNumber> for FuzzyDto {
    fn from(f: &FuzzyNumber) -> Self {
        FuzzyDto {
            x: f.x(),
            d_minus: f.d_minus(),
            d_plus: f.d_plus(),
            mu_minus: f.mu_minus(),
            mu_plus: f.mu_plus(),
        }
    }
}

#[derive(Serialize)]
struct SolveDto {
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    failing_component: Option<&'static str>,
    free_components: Vec<&'static str>,
    solutions: Vec<FuzzyDto>,
    residuals: Vec<f64>,
}

#[derive(Serialize)]
struct PointDto {
    x: f64,
    y: f64,
}

fn print_json<T: Serialize>(value: &T) {
    outln!(
        "{}",
        serde_json::to_string_pretty(value).expect("output serializes")
    );
}

fn emit_single_solution(x: &FuzzyNumber, residual: f64, json: bool, digits: u8) {
    if json {
        print_json(&SolveDto {
            status: "solved",
            failing_component: None,
            free_components: Vec::new(),
            solutions: vec![FuzzyDto::from(x)],
            residuals: vec![residual],
        });
    } else {
        outln!("{}", format_fuzzy(x, digits));
    }
}

fn run(cli: &Cli) -> Result<i32, AppError> {
    let tol = Tolerance::default();
    let digits = cli.digits;
    match &cli.command {
        Command::Op { op } => {
            let result = match op {
                OpCommand::Add { a, b } => parse_fuzzy(a)?.add(&parse_fuzzy(b)?)?,
                OpCommand::Sub { a, b } => parse_fuzzy(a)?.sub(&parse_fuzzy(b)?)?,
                OpCommand::Mul { a, b } => parse_fuzzy(a)?.mul(&parse_fuzzy(b)?)?,
                OpCommand::Div { a, b } => parse_fuzzy(a)?.div(&parse_fuzzy(b)?, &tol)?,
                OpCommand::Scale { lambda, f } => parse_fuzzy(f)?.scale(parse_real(lambda)?)?,
                OpCommand::Neg { f } => parse_fuzzy(f)?.neg()?,
                OpCommand::Inv { f } => parse_fuzzy(f)?.inv(&tol)?,
                OpCommand::Pow { f, n } => parse_fuzzy(f)?.pow(*n)?,
            };
            outln!("{}", format_fuzzy(&result, digits));
            Ok(0)
        }
        Command::Solve { equation } => match equation {
            SolveCommand::LinearReal { a, b, c, json } => {
                let a = parse_real(a)?;
                let b = parse_fuzzy(b)?;
                let c = parse_fuzzy(c)?;
                let x = solve_linear_real(a, &b, &c)?;
                let residual = coord_distance(&x.scale(a)?.add(&b)?, &c);
                emit_single_solution(&x, residual, *json, digits);
                Ok(0)
            }
            SolveCommand::LinearFuzzy { a, b, c, json } => {
                let a = parse_fuzzy(a)?;
                let b = parse_fuzzy(b)?;
                let c = parse_fuzzy(c)?;
                let x = solve_linear_fuzzy(&a, &b, &c, &tol)?;
                let residual = coord_distance(&a.mul(&x)?.add(&b)?, &c);
                emit_single_solution(&x, residual, *json, digits);
                Ok(0)
            }
            SolveCommand::Quadratic { a, b, c, json } => {
                let a = parse_fuzzy(a)?;
                let b = parse_fuzzy(b)?;
                let c = parse_fuzzy(c)?;
                let set = solve_quadratic(&a, &b, &c, &tol)?;
                let free: Vec<&'static str> =
                    set.free_components().iter().map(|c| c.name()).collect();
                if !free.is_empty() {
                    errln!(
                        "note: component(s) {} are unconstrained; their chart coordinate is pinned to 0",
                        free.join(", ")
                    );
                }
                match set.status() {
                    SolveStatus::Solved => {
                        if *json {
                            print_json(&SolveDto {
                                status: "solved",
                                failing_component: None,
                                free_components: free,
                                solutions: set.solutions().iter().map(FuzzyDto::from).collect(),
                                residuals: set.residuals().to_vec(),
                            });
                        } else {
                            for s in set.solutions() {
                                outln!("{}", format_fuzzy(s, digits));
                            }
                        }
                        Ok(0)
                    }
                    SolveStatus::NoRealSolution { component } => {
                        if *json {
                            print_json(&SolveDto {
                                status: "no-real-solution",
                                failing_component: Some(component.name()),
                                free_components: free,
                                solutions: Vec::new(),
                                residuals: Vec::new(),
                            });
                        } else {
                            outln!("no real solution (component {})", component.name());
                        }
                        Ok(EXIT_NO_REAL_SOLUTION)
                    }
                }
            }
        },
        Command::Sample {
            fuzzy,
            points,
            margin,
            format,
        } => {
            let f = parse_fuzzy(fuzzy)?;
            let pts = sample(&f, *points, *margin)?;
            match format {
                SampleFormat::Csv => {
                    outln!("x,y");
                    for (x, y) in pts {
                        outln!("{},{}", format_real(x, digits), format_real(y, digits));
                    }
                }
                SampleFormat::Json => {
                    let dto: Vec<PointDto> =
                        pts.into_iter().map(|(x, y)| PointDto { x, y }).collect();
                    print_json(&dto);
                }
            }
            Ok(0)
        }
        Command::Fit { a, b, c, p, q } => {
            let (px, py) = parse_control_point(p)?;
            let (qx, qy) = parse_control_point(q)?;
            let p = ControlPoint::new(px, py)?;
            let q = ControlPoint::new(qx, qy)?;
            let form = TriControlForm::new(parse_real(a)?, parse_real(b)?, parse_real(c)?, p, q)?;
            let f = from_tri_control(&form)?;
            outln!("{}", format_fuzzy(&f, digits));
            Ok(0)
        }
        Command::Coords { direction } => match direction {
            CoordsCommand::To { fuzzy } => {
                let v = to_coords(&parse_fuzzy(fuzzy)?);
                let rendered: Vec<String> = v
                    .as_array()
                    .iter()
                    .map(|c| format_real(*c, digits))
                    .collect();
                outln!("{}", rendered.join(" "));
                Ok(0)
            }
            CoordsCommand::From { c1, c2, c3, c4, c5 } => {
                let v = CoordVector::new([
                    parse_real(c1)?,
                    parse_real(c2)?,
                    parse_real(c3)?,
                    parse_real(c4)?,
                    parse_real(c5)?,
                ])?;
                let f = from_coords(&v)?;
                outln!("{}", format_fuzzy(&f, digits));
                Ok(0)
            }
        },
    }
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            errln!("error: {e}");
            std::process::exit(exit_code(&e));
        }
    }
}
