mod input;
mod render;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use versal_core::cotangent::{Cotangent, Mode, TangentBasis};
use versal_core::deformation::{self, Options, Status, DEFAULT_MAX_ORDER, MAX_ORDER_ENV};
use versal_core::groebner::hilbert_function;
use versal_core::polyring::RingSpec;
use versal_core::{Basis, Matrix, Rational};

use input::{load_input, InputSystem};
use render::{degree_label, matrix_strings, matrix_text, Document};

/// Tangent spaces, obstruction spaces and versal deformations of polynomial ideals.
#[derive(Debug, Parser)]
#[command(name = "versal", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the result to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Debug)]
struct Degree(Vec<i64>);

fn parse_degree(s: &str) -> Result<Degree, String> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| format!("'{s}' is not a comma-separated list of integers"))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Degree)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Tangent {
    /// First-order deformations of the singularity.
    T1,
    /// The normal module (tangent space of the Hilbert scheme).
    Normal,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// First-order deformations T1.
    T1 {
        file: PathBuf,
        /// Compute only this graded piece, e.g. `-1` or `0,0,0`.
        #[arg(long, value_parser = parse_degree, allow_hyphen_values = true)]
        degree: Option<Degree>,
    },
    /// Obstruction space T2.
    T2 {
        file: PathBuf,
        #[arg(long, value_parser = parse_degree, allow_hyphen_values = true)]
        degree: Option<Degree>,
    },
    /// One graded piece of the normal module Hom(I, S/I).
    Normal {
        file: PathBuf,
        #[arg(long, value_parser = parse_degree, allow_hyphen_values = true)]
        degree: Degree,
    },
    /// Lift first-order deformations to a versal family.
    Deform {
        file: PathBuf,
        /// Use the graded pieces of this degree instead of all degrees.
        #[arg(long, value_parser = parse_degree, allow_hyphen_values = true)]
        degree: Option<Degree>,
        /// Tangent space to lift (default: normal with --degree, t1 without).
        #[arg(long, value_enum)]
        tangent: Option<Tangent>,
        #[arg(long, env = MAX_ORDER_ENV, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
        /// 0 silent, 1 status line, 2 one line per order.
        #[arg(long, default_value_t = 0)]
        verbose: u8,
        /// Not supported.
        #[arg(long, hide = true)]
        smart_lift: bool,
    },
    /// Reduced Gröbner basis of the ideal.
    Gb { file: PathBuf },
    /// Hilbert function of S/I by total weight.
    Hilbert {
        file: PathBuf,
        #[arg(long)]
        upto: u32,
    },
}

enum AppError {
    Usage(String),
    Compute(versal_core::Error),
}

impl From<versal_core::Error> for AppError {
    fn from(e: versal_core::Error) -> Self {
        AppError::Compute(e)
    }
}

struct Outcome {
    text: String,
    doc: Document,
}

fn load(file: &Path) -> Result<(InputSystem, Cotangent<Rational>), AppError> {
    let sys = load_input(file).map_err(|e| AppError::Usage(e.to_string()))?;
    let f0 = Matrix::row_vector(&sys.generators, sys.ring.nx(), 0);
    let ctx = Cotangent::new(&sys.ring, &f0)?;
    Ok((sys, ctx))
}

fn check_degree(ring: &RingSpec, d: &Degree) -> Result<Vec<i64>, AppError> {
    if d.0.len() != ring.grading_rank() {
        return Err(AppError::Usage(format!(
            "--degree has {} entries but the grading has rank {}",
            d.0.len(),
            ring.grading_rank()
        )));
    }
    Ok(d.0.clone())
}

fn mode_of(ring: &RingSpec, d: &Option<Degree>) -> Result<Mode, AppError> {
    Ok(match d {
        Some(d) => Mode::GradedPiece(check_degree(ring, d)?),
        None => Mode::Local,
    })
}

fn basis_outcome(
    command: &str,
    name: &str,
    ring: &RingSpec,
    b: &TangentBasis<Rational>,
) -> Outcome {
    let mut text = format!("dim {name} = {}\n", b.dim());
    if b.dim() > 0 {
        let labels: Vec<String> = b.column_degrees.iter().map(|d| degree_label(d)).collect();
        text.push_str(&format!("column degrees: {}\n", labels.join(" ")));
        text.push_str(&matrix_text(ring, &b.columns));
    }
    let mut doc = Document {
        command: command.into(),
        status: "ok".into(),
        ..Default::default()
    };
    doc.dims.insert(name.into(), b.dim());
    doc.matrices
        .insert(name.into(), matrix_strings(ring, &b.columns));
    Outcome { text, doc }
}

fn series_strings(
    ring: &RingSpec,
    s: &deformation::TOrderSeries<Rational>,
) -> Vec<Vec<Vec<String>>> {
    s.pieces().iter().map(|p| matrix_strings(ring, p)).collect()
}

fn deform(
    file: &Path,
    degree: &Option<Degree>,
    tangent: Option<Tangent>,
    max_order: usize,
    verbose: u8,
    smart_lift: bool,
) -> Result<Outcome, AppError> {
    if smart_lift {
        return Err(AppError::Usage(
            "--smart-lift is not supported: no algorithm for minimizing higher order terms is implemented".into(),
        ));
    }
    if max_order < 1 {
        return Err(AppError::Usage("--max-order must be at least 1".into()));
    }
    let (sys, ctx) = load(file)?;
    let (t1, t2) = match degree {
        Some(d) => {
            let d = check_degree(&sys.ring, d)?;
            let mode = Mode::GradedPiece(d.clone());
            let t1 = match tangent.unwrap_or(Tangent::Normal) {
                Tangent::Normal => ctx.normal_matrix(&d)?,
                Tangent::T1 => ctx.t1(&mode)?,
            };
            (Some(t1), Some(ctx.t2(&mode)?))
        }
        None => {
            if tangent == Some(Tangent::Normal) {
                return Err(AppError::Usage("--tangent normal needs --degree".into()));
            }
            (None, None)
        }
    };
    let opts = Options {
        max_order,
        verbosity: verbose,
    };
    let mut log_lines = Vec::new();
    let st = deformation::versal_deformation(&ctx, t1, t2, &opts, &mut |line| {
        eprintln!("{line}");
        log_lines.push(line.to_string());
    })?;
    let ring = &st.ring;
    let (g, f, r, c) = (st.g.sum(), st.f.sum().transpose(), st.r.sum(), st.c.sum());
    let equations = g.entries().iter().filter(|p| !p.is_zero()).count();
    let mut text = format!(
        "status: {}\norder: {}\nparameters: {}\nequations: {}\n",
        st.status.as_str(),
        st.order,
        st.parameters(),
        equations
    );
    for (name, m) in [
        ("sum G", &g),
        ("transpose sum F", &f),
        ("sum R", &r),
        ("sum C", &c),
    ] {
        text.push_str(&format!("{name}:\n{}", matrix_text(ring, m)));
    }
    let mut doc = Document {
        command: "deform".into(),
        status: st.status.as_str().into(),
        orders_log: log_lines,
        ..Default::default()
    };
    doc.dims.insert("parameters".into(), st.parameters());
    doc.dims.insert("equations".into(), equations);
    doc.dims.insert("obstructions".into(), g.rows());
    doc.dims.insert("order".into(), st.order);
    for (name, m) in [("G", &g), ("F", &f), ("R", &r), ("C", &c)] {
        doc.matrices.insert(name.into(), matrix_strings(ring, m));
    }
    for (name, s) in [("F", &st.f), ("R", &st.r), ("G", &st.g), ("C", &st.c)] {
        doc.series.insert(name.into(), series_strings(ring, s));
    }
    if st.status == Status::Truncated {
        text.push_str(&format!(
            "note: stopped at order {max_order} before the identity held exactly\n"
        ));
    }
    Ok(Outcome { text, doc })
}

fn run(cli: &Cli) -> Result<Outcome, AppError> {
    match &cli.command {
        Command::T1 { file, degree } => {
            let (sys, ctx) = load(file)?;
            let b = ctx.t1(&mode_of(&sys.ring, degree)?)?;
            Ok(basis_outcome("t1", "T1", &sys.ring, &b))
        }
        Command::T2 { file, degree } => {
            let (sys, ctx) = load(file)?;
            let b = ctx.t2(&mode_of(&sys.ring, degree)?)?;
            Ok(basis_outcome("t2", "T2", &sys.ring, &b))
        }
        Command::Normal { file, degree } => {
            let (sys, ctx) = load(file)?;
            let b = ctx.normal_matrix(&check_degree(&sys.ring, degree)?)?;
            Ok(basis_outcome("normal", "normal", &sys.ring, &b))
        }
        Command::Deform {
            file,
            degree,
            tangent,
            max_order,
            verbose,
            smart_lift,
        } => deform(file, degree, *tangent, *max_order, *verbose, *smart_lift),
        Command::Gb { file } => {
            let (sys, ctx) = load(file)?;
            let polys = ctx.ideal_basis().polynomials();
            let strings: Vec<String> = polys.iter().map(|p| sys.ring.format(p)).collect();
            let mut text = format!("gb: {} elements\n", strings.len());
            for s in &strings {
                text.push_str(&format!("  {s}\n"));
            }
            let mut doc = Document {
                command: "gb".into(),
                status: "ok".into(),
                ..Default::default()
            };
            doc.dims.insert("gb".into(), strings.len());
            doc.matrices.insert("gb".into(), vec![strings]);
            Ok(Outcome { text, doc })
        }
        Command::Hilbert { file, upto } => {
            let sys = load_input(file).map_err(|e| AppError::Usage(e.to_string()))?;
            let weights: Vec<Vec<i64>> = sys
                .ring
                .x_degrees()
                .iter()
                .map(|d| vec![RingSpec::weight(d)])
                .collect();
            let coarse = RingSpec::with_degrees(sys.ring.x_vars(), 1, weights)?;
            let gb = Basis::ideal(&sys.generators, sys.ring.nx(), 0);
            let mut text = String::new();
            let mut values = Vec::new();
            for d in 0..=*upto {
                let v = hilbert_function(&gb, &coarse, &[d as i64])?;
                text.push_str(&format!("HF({d}) = {v}\n"));
                values.push(v.to_string());
            }
            let mut doc = Document {
                command: "hilbert".into(),
                status: "ok".into(),
                ..Default::default()
            };
            doc.dims.insert("upto".into(), *upto as usize);
            doc.matrices.insert("hilbert".into(), vec![values]);
            Ok(Outcome { text, doc })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(AppError::Compute(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let body = if cli.json {
        let mut doc = outcome.doc;
        doc.timing.seconds = start.elapsed().as_secs_f64();
        serde_json::to_string_pretty(&doc).expect("serializable document") + "\n"
    } else {
        outcome.text
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, body.as_bytes()),
        None => std::io::stdout().write_all(body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    ExitCode::SUCCESS
}
