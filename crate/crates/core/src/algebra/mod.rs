//! Finite-dimensional graded Lie algebras over GF(q) and their structure.

mod builtin;
mod file;
mod grade;
mod lie;
mod spectrum;
mod structure;
mod subspace;

use thiserror::Error;

use crate::field::FieldError;

pub use builtin::{abelian, builtin, heisenberg, BUILTIN_NAMES};
pub use file::{load_algebra, parse_algebra, AlgebraFile};
pub use grade::{GradeGroup, GroupElement};
pub use lie::{GradedAlgebra, Mat2};
pub use spectrum::{divides_frobenius, min_poly, poly_rem, poly_to_string, spectrum, SpectrumReport};
pub use structure::{
    bracket_span, center, derived_series, derived_splitting, enumerate_ideals,
    enumerate_subalgebras, enumerate_subspaces, gaussian_binomial, is_a_algebra, is_abelian,
    is_graded, is_ideal, is_nilpotent, is_solvable, is_subalgebra, lower_central, monolith,
    nilradical, premet_predicates, radical, sheina_criterion, AAlgebraReport, Budget, Mode,
    PremetReport, DEFAULT_SUBSPACE_CAP,
};
pub use subspace::Subspace;

#[derive(Debug, Clone, Error)]
pub enum AlgebraError {
    #[error("unknown built-in algebra `{0}`")]
    UnknownName(String),
    #[error("{name} needs a primitive cube root of unity, which GF({q}) lacks")]
    CubeRootMissing { name: String, q: u32 },
    #[error("antisymmetry fails for basis pair ({i}, {j}) in coordinate {k}")]
    Antisymmetry { i: usize, j: usize, k: usize },
    #[error("Jacobi identity fails for basis triple ({i}, {j}, {l})")]
    JacobiViolation { i: usize, j: usize, l: usize },
    #[error("[b{i}, b{j}] has a component on b{k} of the wrong grade")]
    GradingViolation { i: usize, j: usize, k: usize },
    #[error("[b{i}, b{j}] leaves the span of the given matrices")]
    NotClosed { i: usize, j: usize },
    #[error("the given matrices are linearly dependent")]
    LinearlyDependent,
    #[error("unsupported grading group {0:?}")]
    UnsupportedGroup(Vec<u32>),
    #[error("algebras do not share field and grading group")]
    Incompatible,
    #[error("enumeration needs {needed} subspaces, over the cap of {cap}")]
    BudgetExceeded { needed: u128, cap: u128 },
    #[error("algebra is not monolithic ({} minimal ideals)", minimal.len())]
    NotMonolithic { minimal: Vec<Subspace> },
    #[error("cannot parse element `{0}`")]
    BadElement(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}
