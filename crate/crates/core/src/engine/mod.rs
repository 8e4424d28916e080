//! Identity checking on concrete algebras and span computations in the
//! free graded Lie algebra, one multidegree cell at a time.

mod consequence;
mod kernel;
mod subst;
mod verify;

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{GradedAlgebra, GradeGroup};
use crate::dsl::DslError;
use crate::field::FieldContext;
use crate::freelie::{FreeLieError, GradingProfile, LiePoly, Multidegree};
use crate::linalg::{Echelon, Vector};

pub use consequence::{consequence_span, ConsequenceReport, GenLimits};
pub use kernel::{compare_algebra_kernels, identity_kernel, multilinear_cells, CellVerdict};
pub use verify::{verify_basis, verify_identity, verify_poly, Counterexample, VerifyReport};

pub use crate::freelie::Word;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("work estimate {needed} exceeds the budget of {cap}")]
    BudgetExceeded { needed: u128, cap: u128 },
    #[error("cells differ: {a} vs {b}")]
    CellMismatch { a: String, b: String },
    #[error("profile mismatch: {0}")]
    ProfileMismatch(String),
    #[error("kernel element failed re-verification: {0}")]
    Unsound(String),
    #[error(transparent)]
    FreeLie(#[from] FreeLieError),
    #[error(transparent)]
    Dsl(#[from] DslError),
}

/// The grading profile matching an algebra's group.
pub fn profile_for(alg: &GradedAlgebra) -> Result<GradingProfile, EngineError> {
    profile_for_group(alg.group())
}

pub fn profile_for_group(g: &GradeGroup) -> Result<GradingProfile, EngineError> {
    GradingProfile::for_group(g)
        .ok_or_else(|| EngineError::ProfileMismatch(format!("no variable profile for grading group {}", g.name())))
}

/// A subspace of one cell of the free algebra, in Lyndon coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellSpan {
    pub cell: Multidegree,
    pub words: Vec<Word>,
    pub basis: Echelon,
}

impl CellSpan {
    pub fn new(cell: Multidegree, words: Vec<Word>, basis: Echelon) -> CellSpan {
        debug_assert_eq!(words.len(), basis.cols());
        CellSpan { cell, words, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.words.len()
    }

    pub fn dim(&self) -> usize {
        self.basis.rank()
    }

    pub fn polys(&self) -> Vec<LiePoly> {
        self.basis
            .rows()
            .iter()
            .map(|r| LiePoly::from_coordinates(&self.words, r))
            .collect()
    }

    pub fn texts(&self, ctx: &FieldContext) -> Vec<String> {
        self.polys().iter().map(|p| p.to_text(ctx)).collect()
    }

    pub fn contains(&self, ctx: &FieldContext, v: &Vector) -> bool {
        self.basis.contains(ctx, v)
    }

    /// The fragment shared by every report about this span.
    pub fn to_json(&self, ctx: &FieldContext) -> Value {
        json!({
            "cell": cell_json(&self.cell),
            "ambient_dim": self.ambient_dim(),
            "dim": self.dim(),
            "basis": self.texts(ctx),
        })
    }
}

pub fn cell_json(d: &Multidegree) -> Value {
    let map: serde_json::Map<String, Value> = d
        .entries()
        .iter()
        .map(|(v, e)| (v.to_string(), json!(e)))
        .collect();
    Value::Object(map)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Equal,
    ASubsetB,
    BSubsetA,
    Incomparable,
}

impl Relation {
    pub fn as_str(self) -> &'static str {
        match self {
            Relation::Equal => "equal",
            Relation::ASubsetB => "a_subset_b",
            Relation::BSubsetA => "b_subset_a",
            Relation::Incomparable => "incomparable",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpanComparison {
    pub relation: Relation,
    pub dim_a: usize,
    pub dim_b: usize,
}

pub fn compare_spans(ctx: &FieldContext, a: &CellSpan, b: &CellSpan) -> Result<SpanComparison, EngineError> {
    if a.cell != b.cell || a.words != b.words {
        return Err(EngineError::CellMismatch {
            a: a.cell.to_string(),
            b: b.cell.to_string(),
        });
    }
    let ab = a.basis.is_subspace_of(ctx, &b.basis);
    let ba = b.basis.is_subspace_of(ctx, &a.basis);
    let relation = match (ab, ba) {
        (true, true) => Relation::Equal,
        (true, false) => Relation::ASubsetB,
        (false, true) => Relation::BSubsetA,
        (false, false) => Relation::Incomparable,
    };
    Ok(SpanComparison {
        relation,
        dim_a: a.dim(),
        dim_b: b.dim(),
    })
}
