//! Command-line driver: verification suites and data reports.
//!
//! Exit codes: 0 when every selected check passes, 1 when a check fails,
//! 2 for usage, parameter or parse errors.

pub mod args;
pub mod output;
pub mod suites;

use args::{Cli, Command, DecomposeArgs, FrameArg, GlobalOpts, ReportCmd, SymmetryArgs, VerifyArgs};
use clap::Parser;
use hsym_core::exprio::{parse_op, parse_poly, EvalContext};
use hsym_core::gmodule::{self, QuotientDim, SocleReport, WeightEntry};
use hsym_core::harmonic;
use hsym_core::poly::Frame;
use hsym_core::symmetry::check_symmetry;
use output::{Envelope, Rows, VerifyBody, SCHEMA_VERSION};
use serde::Serialize;
use std::ffi::OsString;
use std::io::Write;
use std::path::Path;
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Config(#[from] suites::ConfigError),
    #[error("expression error at {0}")]
    Expr(#[from] hsym_core::exprio::ExprError),
    #[error(transparent)]
    Algebra(#[from] hsym_core::Error),
    #[error("cannot write report: {0}")]
    Io(#[from] std::io::Error),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) | CliError::Pool(_) => EXIT_FAILED,
            _ => EXIT_USAGE,
        }
    }
}

/// Parses `argv` (including the program name), runs, and returns the exit code.
pub fn main_with<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn emit(global: &GlobalOpts, text: &str) -> Result<(), CliError> {
    match &global.out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn envelope<T: Serialize>(global: &GlobalOpts, command: &str, body: T) -> Envelope<T> {
    Envelope {
        schema_version: SCHEMA_VERSION,
        command: command.to_string(),
        seed: global.seed,
        body,
    }
}

pub fn run(cli: &Cli) -> Result<i32, CliError> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.global.threads {
        pool = pool.num_threads(t);
    }
    let pool = pool.build()?;
    pool.install(|| match &cli.command {
        Command::Verify(v) => verify(&cli.global, v),
        Command::Report {
            what: ReportCmd::WeightDims { n, r, max_degree },
        } => weight_dims(&cli.global, *n, *r, *max_degree),
        Command::SymmetryCheck(s) => symmetry_check(&cli.global, s),
        Command::Decompose(d) => decompose(&cli.global, d),
    })
}

fn verify(global: &GlobalOpts, v: &VerifyArgs) -> Result<i32, CliError> {
    let cfg = suites::RunConfig::new(&v.params, global.seed, v.cases)?;
    let reports = suites::run_suites(v.suite, &cfg, !global.no_timeout);
    let passed = reports.iter().all(|s| s.passed);
    let first_failure = reports
        .iter()
        .flat_map(|s| s.items.iter().map(move |i| (s.suite, i)))
        .flat_map(|(s, i)| i.checks.iter().map(move |c| (s, &i.key, c)))
        .find(|(_, _, c)| !c.passed)
        .map(|(s, k, c)| format!("{s:?} / {k} / {}: {}", c.name, c.detail));
    let suite_name = format!("{:?}", v.suite).to_lowercase();
    let env = envelope(
        global,
        &format!("verify {suite_name}"),
        VerifyBody {
            passed,
            config: cfg,
            suites: reports,
        },
    );
    emit(global, &output::render_verify(&env, global.format))?;
    if let Some(f) = first_failure {
        eprintln!("first counterexample: {f}");
        return Ok(EXIT_FAILED);
    }
    Ok(EXIT_OK)
}

#[derive(Debug, Serialize)]
struct WeightDimsBody {
    n: usize,
    r: usize,
    max_degree: usize,
    case: gmodule::ModuleCase,
    quotient_dim: Option<usize>,
    degree_dims: Vec<usize>,
    weights: Vec<WeightEntry>,
    socle: SocleReport,
}

impl Rows for WeightDimsBody {
    fn rows(&self) -> Vec<(String, String)> {
        let mut v = vec![
            ("n".into(), self.n.to_string()),
            ("r".into(), self.r.to_string()),
            ("max_degree".into(), self.max_degree.to_string()),
            ("case".into(), format!("{:?}", self.case)),
            (
                "quotient_dim".into(),
                self.quotient_dim.map_or("none".into(), |d| d.to_string()),
            ),
        ];
        for (m, d) in self.degree_dims.iter().enumerate() {
            v.push((format!("dim R_r({m})"), d.to_string()));
        }
        for w in &self.weights {
            v.push((
                format!("degree {} weight ({})", w.degree, w.eps_coords.join(", ")),
                w.dim.to_string(),
            ));
        }
        v
    }
}

fn check_nr(n: usize, r: usize) -> Result<(), CliError> {
    suites::RunConfig::new(
        &args::ParamArgs {
            n: Some(n),
            r: Some(r),
            ..Default::default()
        },
        0,
        0,
    )?;
    Ok(())
}

fn weight_dims(global: &GlobalOpts, n: usize, r: usize, max_degree: usize) -> Result<i32, CliError> {
    check_nr(n, r)?;
    let rep = gmodule::weight_space_dims(n, r, max_degree)?;
    let socle = gmodule::socle_report(n, r, max_degree.max(2 * (r + 2)))?;
    let quotient_dim = match socle.quotient_dim {
        Some(QuotientDim::Finite(d)) => Some(d),
        _ => None,
    };
    let body = WeightDimsBody {
        n,
        r,
        max_degree,
        case: gmodule::module_case(n, r),
        quotient_dim,
        degree_dims: (0..=max_degree).map(|m| rep.total_in_degree(m)).collect(),
        weights: rep.weights,
        socle,
    };
    emit(
        global,
        &output::render(&envelope(global, "report weight-dims", body), global.format),
    )?;
    Ok(EXIT_OK)
}

/// The argument itself, or the contents of the file it names.
fn expr_text(arg: &str) -> Result<String, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        Ok(std::fs::read_to_string(path)?.trim().to_string())
    } else {
        Ok(arg.to_string())
    }
}

#[derive(Debug, Serialize)]
struct SymmetryBody {
    n: usize,
    r: usize,
    p: usize,
    operator: String,
    is_symmetry: bool,
    trivial: bool,
    witness: Option<String>,
}

impl Rows for SymmetryBody {
    fn rows(&self) -> Vec<(String, String)> {
        vec![
            ("n".into(), self.n.to_string()),
            ("r".into(), self.r.to_string()),
            ("p".into(), self.p.to_string()),
            ("operator".into(), self.operator.clone()),
            ("is_symmetry".into(), self.is_symmetry.to_string()),
            ("trivial".into(), self.trivial.to_string()),
            ("witness".into(), self.witness.clone().unwrap_or_default()),
        ]
    }
}

fn symmetry_check(global: &GlobalOpts, s: &SymmetryArgs) -> Result<i32, CliError> {
    let p = s.p.unwrap_or(s.n);
    suites::RunConfig::new(
        &args::ParamArgs {
            n: Some(s.n),
            r: Some(s.r),
            p: Some(p),
            max_degree: None,
        },
        0,
        0,
    )?;
    let ctx = EvalContext::new(Frame::x(s.n)).with_r(s.r).with_p(p);
    let op = parse_op(&expr_text(&s.expr)?, &ctx)?;
    let v = check_symmetry(&op, s.r, p)?;
    let body = SymmetryBody {
        n: s.n,
        r: s.r,
        p,
        operator: op.to_string(),
        is_symmetry: v.is_symmetry,
        trivial: v.trivial,
        witness: v.witness.as_ref().map(|w| w.to_string()),
    };
    emit(
        global,
        &output::render(&envelope(global, "symmetry-check", body), global.format),
    )?;
    Ok(if v.is_symmetry { EXIT_OK } else { EXIT_FAILED })
}

#[derive(Debug, Serialize)]
struct Component {
    degree: u32,
    k: usize,
    harmonic: String,
}

#[derive(Debug, Serialize)]
struct DecomposeBody {
    n: usize,
    frame: String,
    input: String,
    components: Vec<Component>,
    recomposes: bool,
}

impl Rows for DecomposeBody {
    fn rows(&self) -> Vec<(String, String)> {
        let mut v = vec![
            ("n".into(), self.n.to_string()),
            ("frame".into(), self.frame.clone()),
            ("input".into(), self.input.clone()),
        ];
        for c in &self.components {
            v.push((format!("degree {} F^{}", c.degree, c.k), c.harmonic.clone()));
        }
        v.push(("recomposes".into(), self.recomposes.to_string()));
        v
    }
}

fn decompose(global: &GlobalOpts, d: &DecomposeArgs) -> Result<i32, CliError> {
    check_nr(d.n, 1)?;
    let frame = match d.frame {
        FrameArg::X => Frame::x(d.n),
        FrameArg::U => Frame::u(d.n),
    };
    let p = parse_poly(&expr_text(&d.expr)?, &EvalContext::new(frame))?;
    let graded = harmonic::decompose_graded(&p)?;
    let mut components = Vec::new();
    let mut total = hsym_core::Poly::zero(frame);
    for (m, dec) in &graded {
        total = &total + &dec.recompose();
        for (k, h) in &dec.components {
            components.push(Component {
                degree: *m as u32,
                k: *k,
                harmonic: h.to_string(),
            });
        }
    }
    let recomposes = total == p;
    let body = DecomposeBody {
        n: d.n,
        frame: frame.to_string(),
        input: p.to_string(),
        components,
        recomposes,
    };
    emit(
        global,
        &output::render(&envelope(global, "decompose", body), global.format),
    )?;
    Ok(if recomposes { EXIT_OK } else { EXIT_FAILED })
}
