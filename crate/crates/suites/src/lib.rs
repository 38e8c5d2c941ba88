//! Identity catalog for the osp(1|2) realization and its supercentralizer,
//! an exact-zero runner and a cross-check against the spinor-valued
//! polynomial oracle.

pub mod catalog;
pub mod config;
pub mod crosscheck;
pub mod env;
pub mod expr;
pub mod runner;

use pinosp::oracle::OracleError;
use pinosp::{AlgebraError, CentralizerError, OspError};
use thiserror::Error;

pub use catalog::{catalog, IdentityCase, Needs, SUITES};
pub use config::{Config, ConfigError};
pub use crosscheck::{run_oracle_crosscheck, CrosscheckReport};
pub use env::Env;
pub use expr::Expr;
pub use runner::{render_text, run_suite, RunError, RunOptions, Status, SuiteReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CaseError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Centralizer(#[from] CentralizerError),
    #[error(transparent)]
    Osp(#[from] OspError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("unsupported: {0}")]
    Unsupported(String),
}
