use std::cmp::Ordering;

use crate::field::{FieldContext, FieldElement};
use crate::linalg::{Echelon, Vector};

use super::GradedAlgebra;

/// A subspace of an algebra, held as a canonical echelon basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Echelon,
}

impl Subspace {
    pub fn zero(dim: usize) -> Subspace {
        Subspace {
            basis: Echelon::new(dim),
        }
    }

    pub fn whole(alg: &GradedAlgebra) -> Subspace {
        Subspace {
            basis: Echelon::full(alg.ctx(), alg.dim()),
        }
    }

    pub fn span<I>(ctx: &FieldContext, ambient_dim: usize, vectors: I) -> Subspace
    where
        I: IntoIterator<Item = Vector>,
    {
        Subspace {
            basis: Echelon::from_rows(ctx, ambient_dim, vectors),
        }
    }

    pub fn from_echelon(basis: Echelon) -> Subspace {
        Subspace { basis }
    }

    pub fn echelon(&self) -> &Echelon {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_zero()
    }

    pub fn basis(&self) -> &[Vector] {
        self.basis.rows()
    }

    pub fn contains(&self, ctx: &FieldContext, v: &[FieldElement]) -> bool {
        self.basis.contains(ctx, v)
    }

    pub fn is_subspace_of(&self, ctx: &FieldContext, other: &Subspace) -> bool {
        self.basis.is_subspace_of(ctx, &other.basis)
    }

    pub fn sum(&self, ctx: &FieldContext, other: &Subspace) -> Subspace {
        Subspace {
            basis: self.basis.sum(ctx, &other.basis),
        }
    }

    pub fn intersect(&self, ctx: &FieldContext, other: &Subspace) -> Subspace {
        Subspace {
            basis: self.basis.intersect(ctx, &other.basis),
        }
    }

    /// Basis rendered through the algebra's labels.
    pub fn describe(&self, alg: &GradedAlgebra) -> Vec<String> {
        self.basis().iter().map(|v| alg.format_element(v)).collect()
    }

    /// Echelon rows as canonical element indices, for reports.
    pub fn raw_rows(&self) -> Vec<Vec<usize>> {
        self.basis()
            .iter()
            .map(|r| r.iter().map(|x| x.index()).collect())
            .collect()
    }

    /// Order by dimension, then by echelon rows; used to sort enumerations.
    pub fn canonical_cmp(&self, other: &Subspace) -> Ordering {
        self.dim()
            .cmp(&other.dim())
            .then_with(|| self.basis.pivots().cmp(other.basis.pivots()))
            .then_with(|| self.basis.rows().cmp(other.basis.rows()))
    }
}
