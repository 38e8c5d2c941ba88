//! Command-line front end: expression evaluation, supercommutators,
//! identity verification and group information.

pub mod eval;
pub mod parse;

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use pinosp::par::with_jobs;
use pinosp::Parallelism;
use pinosp_suites::catalog::{cases_for, SUITES};
use pinosp_suites::crosscheck::run_oracle_crosscheck;
use pinosp_suites::{render_text, run_suite, Config, RunOptions, Status, SuiteReport};
use serde_json::json;

pub use eval::{EvalError, Evaluator};
pub use parse::{parse, Ast, ParseError};

/// Every report passed (or was skipped).
pub const EXIT_OK: i32 = 0;
/// At least one identity failed.
pub const EXIT_FAIL: i32 = 1;
/// Usage, parse or configuration error.
pub const EXIT_USAGE: i32 = 2;

/// JSON schema for one verification report.
pub const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "pinosp",
    version,
    about = "Exact computations in the Cherednik–Clifford algebra and its osp(1|2) supercentralizer"
)]
pub struct Cli {
    /// Built-in group such as A1@2, A2@3, B2@2, A1@5, or custom:<file>.
    #[arg(long, global = true, default_value = "A1@2")]
    pub group: String,
    /// `symbolic` or comma-separated values (p/q or a+bi) per parameter.
    #[arg(
        long,
        global = true,
        default_value = "symbolic",
        allow_hyphen_values = true
    )]
    pub kappa: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 7)]
    pub seed: u64,
    #[arg(long = "max-degree", global = true, default_value_t = 3)]
    pub max_degree: u32,
    /// Worker threads; 1 runs sequentially.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the normal form of an expression.
    Eval { expr: String },
    /// Print the normal form of the supercommutator [a, b].
    Commute { a: String, b: String },
    /// Run identity suites and report exact-zero status.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Also require every residual to annihilate this many random
        /// module vectors per sector.
        #[arg(long, default_value_t = 0)]
        oracle: usize,
        /// Record elapsed milliseconds.
        #[arg(long)]
        timings: bool,
    },
    /// Check the engine against the polynomial-spinor module.
    Crosscheck {
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// List suites and their case counts.
    ListSuites,
    /// Group data: reflections, roots, coroots and parameters.
    Info,
}

/// Run with explicit arguments and output streams; returns the exit code.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    let jobs = cli.jobs;
    with_jobs(jobs, || match execute(&cli, out) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    })
}

fn parallelism(jobs: Option<usize>) -> Parallelism {
    if jobs == Some(1) {
        Parallelism::Sequential
    } else {
        Parallelism::Rayon
    }
}

fn evaluate(ev: &Evaluator, src: &str) -> Result<pinosp::Element, String> {
    let ast = parse(src).map_err(|e| format!("parse error at {e}"))?;
    ev.eval(&ast).map_err(|e| e.to_string())
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, String> {
    let io = |e: std::io::Error| e.to_string();
    if let Command::ListSuites = cli.command {
        return list_suites(cli.format, out).map_err(io);
    }
    let config = Config::parse(&cli.group, &cli.kappa).map_err(|e| e.to_string())?;
    match &cli.command {
        Command::Eval { expr } => {
            let ev = Evaluator::new(&config.ctx).map_err(|e| e.to_string())?;
            let v = evaluate(&ev, expr)?;
            print_element(cli.format, &config, &v, out).map_err(io)?;
        }
        Command::Commute { a, b } => {
            let ev = Evaluator::new(&config.ctx).map_err(|e| e.to_string())?;
            let v = evaluate(&ev, a)?.supercommutator(&evaluate(&ev, b)?);
            print_element(cli.format, &config, &v, out).map_err(io)?;
        }
        Command::Verify {
            suite,
            oracle,
            timings,
        } => {
            let options = RunOptions {
                par: parallelism(cli.jobs),
                timings: *timings,
                oracle_samples: *oracle,
                seed: cli.seed,
                max_degree: cli.max_degree,
            };
            let reports = run_suite(suite, &config, &options).map_err(|e| e.to_string())?;
            match cli.format {
                Format::Text => write!(out, "{}", render_text(&reports)).map_err(io)?,
                Format::Json => {
                    for r in &reports {
                        writeln!(
                            out,
                            "{}",
                            serde_json::to_string(r).map_err(|e| e.to_string())?
                        )
                        .map_err(io)?;
                    }
                }
            }
            return Ok(exit_code(&reports));
        }
        Command::Crosscheck { samples } => {
            let r = run_oracle_crosscheck(&config, cli.seed, *samples, cli.max_degree)
                .map_err(|e| e.to_string())?;
            match cli.format {
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&r).map_err(|e| e.to_string())?
                )
                .map_err(io)?,
                Format::Text => {
                    writeln!(
                        out,
                        "{}: {} vectors, {} residuals, {} products, mutation {}",
                        if r.pass { "pass" } else { "fail" },
                        r.vectors,
                        r.residuals,
                        r.products,
                        if r.mutation_detected {
                            "detected"
                        } else {
                            "missed"
                        }
                    )
                    .map_err(io)?;
                    for f in &r.failures {
                        writeln!(out, "  diverged: {f}").map_err(io)?;
                    }
                }
            }
            return Ok(if r.pass { EXIT_OK } else { EXIT_FAIL });
        }
        Command::Info => info(cli.format, &config, out).map_err(io)?,
        Command::ListSuites => unreachable!(),
    }
    Ok(EXIT_OK)
}

/// `EXIT_FAIL` if any report failed or disagreed with the oracle.
pub fn exit_code(reports: &[SuiteReport]) -> i32 {
    if reports
        .iter()
        .any(|r| r.status == Status::Fail || r.oracle == Some(false))
    {
        EXIT_FAIL
    } else {
        EXIT_OK
    }
}

fn print_element(
    format: Format,
    config: &Config,
    v: &pinosp::Element,
    out: &mut dyn Write,
) -> std::io::Result<()> {
    match format {
        Format::Text => writeln!(out, "{v}"),
        Format::Json => writeln!(
            out,
            "{}",
            json!({"group": config.group, "kappa": config.kappa_label(), "terms": v.len(), "value": v.to_string()})
        ),
    }
}

fn list_suites(format: Format, out: &mut dyn Write) -> std::io::Result<i32> {
    for (id, about) in SUITES {
        let n = cases_for(id).map(|c| c.len()).unwrap_or(0);
        match format {
            Format::Text => writeln!(out, "{id:<24} {n:>3}  {about}")?,
            Format::Json => writeln!(out, "{}", json!({"suite": id, "cases": n, "about": about}))?,
        }
    }
    Ok(EXIT_OK)
}

fn info(format: Format, config: &Config, out: &mut dyn Write) -> std::io::Result<()> {
    let ctx = &config.ctx;
    let grp = ctx.group();
    let fmt_vec = |v: &[pinosp::Rational]| {
        format!(
            "({})",
            v.iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )
    };
    let refl: Vec<_> = grp
        .reflections()
        .iter()
        .map(|r| {
            json!({
                "name": format!("s{}", r.element),
                "root": fmt_vec(&r.root),
                "coroot": fmt_vec(&r.coroot),
                "class": r.class,
                "parameter": grp.param_labels().get(r.param).cloned().unwrap_or_default(),
            })
        })
        .collect();
    match format {
        Format::Json => writeln!(
            out,
            "{}",
            json!({
                "group": config.group,
                "dim": ctx.dim(),
                "order": grp.order(),
                "orthonormal": ctx.space().is_orthonormal(),
                "parameters": grp.param_labels(),
                "kappa": config.kappa_label(),
                "reflections": refl,
            })
        ),
        Format::Text => {
            writeln!(
                out,
                "group {}  dim {}  order {}  kappa {}",
                config.group,
                ctx.dim(),
                grp.order(),
                config.kappa_label()
            )?;
            writeln!(out, "parameters: {}", grp.param_labels().join(", "))?;
            for r in grp.reflections() {
                writeln!(
                    out,
                    "  s{:<4} root {:<20} coroot {:<20} k{}",
                    r.element,
                    fmt_vec(&r.root),
                    fmt_vec(&r.coroot),
                    r.param + 1
                )?;
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(status: Status, oracle: Option<bool>) -> SuiteReport {
        SuiteReport {
            id: "t".into(),
            anchor: "a = b".into(),
            group: "A1@2".into(),
            dim: 2,
            kappa: "symbolic".into(),
            status,
            residual_terms: 0,
            witness: None,
            ms: 0,
            note: None,
            oracle,
        }
    }

    #[test]
    fn exit_codes() {
        assert_eq!(
            exit_code(&[report(Status::Pass, None), report(Status::Skipped, None)]),
            EXIT_OK
        );
        assert_eq!(
            exit_code(&[report(Status::Pass, None), report(Status::Fail, None)]),
            EXIT_FAIL
        );
        assert_eq!(exit_code(&[report(Status::Pass, Some(false))]), EXIT_FAIL);
        assert_eq!(exit_code(&[report(Status::Pass, Some(true))]), EXIT_OK);
    }
}
