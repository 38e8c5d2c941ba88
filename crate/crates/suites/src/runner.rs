//! Evaluate catalog cases to normal form and report exact-zero status.

use std::fmt::Write as _;
use std::time::Instant;

use pinosp::oracle::{random_vector, sectors, PolySpinor};
use pinosp::{Element, Parallelism};
use serde::Serialize;
use thiserror::Error;

use crate::catalog::{cases_for, IdentityCase};
use crate::config::Config;
use crate::env::Env;
use crate::CaseError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub id: String,
    pub anchor: String,
    pub group: String,
    pub dim: usize,
    pub kappa: String,
    pub status: Status,
    pub residual_terms: usize,
    pub witness: Option<String>,
    pub ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub par: Parallelism,
    /// Record wall-clock times; off keeps reports byte-identical across runs.
    pub timings: bool,
    /// Random module vectors per sector on which every residual must also
    /// act as zero; 0 disables the check.
    pub oracle_samples: usize,
    pub seed: u64,
    pub max_degree: u32,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            par: Parallelism::default(),
            timings: false,
            oracle_samples: 0,
            seed: 7,
            max_degree: 3,
        }
    }
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error(transparent)]
    Setup(#[from] CaseError),
}

/// Run every case of `suite` (or `"all"`) in one configuration; reports are
/// ordered by id.
pub fn run_suite(
    suite: &str,
    config: &Config,
    options: &RunOptions,
) -> Result<Vec<SuiteReport>, RunError> {
    let cases = cases_for(suite).ok_or_else(|| RunError::UnknownSuite(suite.to_string()))?;
    run_cases(&cases, config, options)
}

pub fn run_cases(
    cases: &[IdentityCase],
    config: &Config,
    options: &RunOptions,
) -> Result<Vec<SuiteReport>, RunError> {
    let env = Env::new(&config.ctx, options.par)?;
    let mut reports = options
        .par
        .map(cases, |c| run_case(c, &env, config, options));
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(reports)
}

pub fn run_case(
    case: &IdentityCase,
    env: &Env,
    config: &Config,
    options: &RunOptions,
) -> SuiteReport {
    let start = Instant::now();
    let mut report = SuiteReport {
        id: case.id.to_string(),
        anchor: case.anchor.to_string(),
        group: config.group.clone(),
        dim: config.dim(),
        kappa: config.kappa_label(),
        status: Status::Pass,
        residual_terms: 0,
        witness: None,
        ms: 0,
        note: None,
        oracle: None,
    };
    let space = config.ctx.space();
    if config.dim() < case.needs.min_dim || (case.needs.orthonormal && !space.is_orthonormal()) {
        report.status = Status::Skipped;
        report.note = Some(format!(
            "needs dimension ≥ {}{}",
            case.needs.min_dim,
            if case.needs.orthonormal {
                " with an orthonormal basis"
            } else {
                ""
            }
        ));
        return report;
    }
    match (case.build)(env) {
        Err(CaseError::Unsupported(msg)) => {
            report.status = Status::Skipped;
            report.note = Some(msg);
        }
        Err(e) => {
            report.status = Status::Fail;
            report.note = Some(e.to_string());
        }
        Ok(residuals) => {
            let values: Vec<Element> = residuals.iter().map(|r| env.eval(r)).collect();
            report.residual_terms = values.iter().map(Element::len).sum();
            if let Some(bad) = values.iter().find(|v| !v.is_zero()) {
                report.status = Status::Fail;
                report.witness = witness(bad);
            }
            if options.oracle_samples > 0 && space.is_orthonormal() {
                report.oracle = Some(oracle_agrees(&residuals, env, options));
            }
        }
    }
    if options.timings {
        report.ms = start.elapsed().as_millis() as u64;
    }
    report
}

/// The largest monomial of a nonzero residual, with its coefficient.
pub fn witness(e: &Element) -> Option<String> {
    e.leading()
        .map(|(m, c)| Element::monomial(e.ctx(), *m, c.clone()).to_string())
}

fn oracle_agrees(residuals: &[crate::Expr], env: &Env, options: &RunOptions) -> bool {
    let ctx = env.ctx();
    let mut vs: Vec<PolySpinor> = Vec::new();
    for &s in sectors(ctx) {
        for k in 0..options.oracle_samples {
            match random_vector(
                ctx,
                s,
                options.seed.wrapping_add(k as u64),
                options.max_degree,
            ) {
                Ok(v) => vs.push(v),
                Err(_) => return false,
            }
        }
    }
    residuals.iter().all(|r| {
        vs.iter()
            .all(|v| r.act(v).map(|w| w.is_zero()).unwrap_or(false))
    })
}

/// Fixed-width text table, one line per report.
pub fn render_text(reports: &[SuiteReport]) -> String {
    let width = reports.iter().map(|r| r.id.len()).max().unwrap_or(2).max(2);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<width$}  {:<8}  {:<8}  {:>8}  {:>8}  detail",
        "id", "group", "status", "terms", "ms"
    );
    for r in reports {
        let detail = r.witness.as_deref().or(r.note.as_deref()).unwrap_or("");
        let _ = writeln!(
            out,
            "{:<width$}  {:<8}  {:<8}  {:>8}  {:>8}  {}",
            r.id,
            r.group,
            r.status.to_string(),
            r.residual_terms,
            r.ms,
            detail
        );
    }
    let pass = reports.iter().filter(|r| r.status == Status::Pass).count();
    let fail = reports.iter().filter(|r| r.status == Status::Fail).count();
    let _ = writeln!(
        out,
        "{pass} passed, {fail} failed, {} skipped",
        reports.len() - pass - fail
    );
    out
}
