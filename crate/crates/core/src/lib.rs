//! Exact symbolic engine for a rational Cherednik algebra tensored with a
//! Clifford algebra, the osp(1|2) realization inside it and the generators
//! of its supercentralizer.
pub mod algebra;
pub mod centralizer;
pub mod geometry;
pub mod groups;
pub mod oracle;
pub mod osp;
pub mod par;
pub mod scalars;
pub mod special;

pub use algebra::{Algebra, AlgebraError, Element, KappaMode, Monomial};
pub use centralizer::{Centralizer, CentralizerError, ExplicitForm};
pub use geometry::{Covector, QuadraticSpace, Vector};
pub use groups::{GroupSpec, ReflectionGroup};
pub use osp::{Osp, OspError};
pub use par::Parallelism;
pub use scalars::{BaseNumber, Rational, Scalar};
