//! The superalgebra `A_κ = H_κ ⊗ 𝒞` in PBW normal form.

mod clifford;
mod element;
mod monomial;
mod rewrite;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub use element::Element;
pub use monomial::{Exps, Monomial};

pub use crate::geometry::QuadraticSpace;
use crate::groups::ReflectionGroup;
use crate::scalars::{BaseNumber, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("expected {expected} deformation values, got {got}")]
    KappaCount { expected: usize, got: usize },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("group element {0} does not exist")]
    NoSuchElement(usize),
    #[error("root of reflection s{0} has squared length {1}; only 1 and 2 are supported")]
    RootLength(usize, String),
    #[error("operation requires an orthonormal Gram matrix")]
    NotOrthonormal,
}

/// Deformation parameters: symbolic indeterminates or numeric values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KappaMode {
    Symbolic,
    Numeric(Vec<BaseNumber>),
}

impl fmt::Display for KappaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KappaMode::Symbolic => write!(f, "symbolic"),
            KappaMode::Numeric(v) => {
                let parts: Vec<String> = v.iter().map(|b| b.to_string()).collect();
                write!(f, "{}", parts.join(","))
            }
        }
    }
}

/// Shared context of an algebra: group, quadratic space, deformation mode
/// and product caches.
pub struct Algebra {
    group: ReflectionGroup,
    kappa: KappaMode,
    kappa_scalars: Vec<Scalar>,
    orthonormal: bool,
    caches: rewrite::Caches,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("group", &self.group.name())
            .field("kappa", &self.kappa)
            .finish()
    }
}

impl Algebra {
    pub fn new(group: ReflectionGroup, kappa: KappaMode) -> Result<Arc<Self>, AlgebraError> {
        let n = group.param_count();
        let kappa_scalars = match &kappa {
            KappaMode::Symbolic => (0..n).map(Scalar::kappa).collect(),
            KappaMode::Numeric(v) => {
                if v.len() != n {
                    return Err(AlgebraError::KappaCount {
                        expected: n,
                        got: v.len(),
                    });
                }
                v.iter().cloned().map(Scalar::from_base).collect()
            }
        };
        let orthonormal = group.space().is_orthonormal();
        Ok(Arc::new(Self {
            group,
            kappa,
            kappa_scalars,
            orthonormal,
            caches: rewrite::Caches::new(),
        }))
    }

    pub fn symbolic(group: ReflectionGroup) -> Arc<Self> {
        Self::new(group, KappaMode::Symbolic).expect("symbolic mode always valid")
    }

    pub fn group(&self) -> &ReflectionGroup {
        &self.group
    }

    pub fn space(&self) -> &QuadraticSpace {
        self.group.space()
    }

    pub fn dim(&self) -> usize {
        self.group.dim()
    }

    pub fn kappa_mode(&self) -> &KappaMode {
        &self.kappa
    }

    pub fn is_symbolic(&self) -> bool {
        self.kappa == KappaMode::Symbolic
    }

    /// The deformation parameter `κ` attached to parameter slot `param`.
    pub fn kappa(&self, param: usize) -> &Scalar {
        &self.kappa_scalars[param]
    }

    /// Number of memoized rewriting results.
    pub fn cache_entries(&self) -> usize {
        self.caches.entries()
    }
}

#[cfg(test)]
mod tests;
