use crate::algebra::GradedAlgebra;
use crate::field::FieldContext;
use crate::freelie::{GradedVar, GradingProfile};
use crate::linalg::Vector;

use super::EngineError;

/// How one variable ranges over its grade component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(super) enum Range {
    /// Every element: `q^dim` values.
    Full,
    /// Only the basis vectors (enough for a variable of degree 1).
    Basis,
}

/// Mixed-radix enumeration of substitution tuples.
///
/// The first variable is the most significant digit; inside a `Full`
/// variable the first coordinate varies fastest.
#[derive(Debug, Clone)]
pub(super) struct Substitutions {
    pub vars: Vec<GradedVar>,
    comps: Vec<Vec<usize>>,
    ranges: Vec<Range>,
    sizes: Vec<u128>,
    pub total: u128,
}

impl Substitutions {
    pub fn new(
        alg: &GradedAlgebra,
        profile: &GradingProfile,
        vars: &[(GradedVar, Range)],
    ) -> Result<Substitutions, EngineError> {
        let q = alg.ctx().q() as u128;
        let mut comps = Vec::new();
        let mut sizes = Vec::new();
        let mut total: u128 = 1;
        for &(v, range) in vars {
            let g = profile
                .grade_of(v)
                .map_err(|_| EngineError::ProfileMismatch(format!("variable {v} is not in profile {}", profile.name())))?;
            let comp = alg.component(&g);
            let size = match range {
                Range::Full => q.checked_pow(comp.len() as u32).unwrap_or(u128::MAX),
                Range::Basis => comp.len().max(1) as u128,
            };
            total = total.saturating_mul(size);
            comps.push(comp);
            sizes.push(size);
        }
        Ok(Substitutions {
            vars: vars.iter().map(|&(v, _)| v).collect(),
            comps,
            ranges: vars.iter().map(|&(_, r)| r).collect(),
            sizes,
            total,
        })
    }

    pub fn component_dim(&self, i: usize) -> usize {
        self.comps[i].len()
    }

    pub fn decode(&self, ctx: &FieldContext, dim: usize, mut t: u128) -> Vec<Vector> {
        let mut out = vec![Vec::new(); self.vars.len()];
        for i in (0..self.vars.len()).rev() {
            let k = t % self.sizes[i];
            t /= self.sizes[i];
            let mut x = vec![ctx.zero(); dim];
            let comp = &self.comps[i];
            match self.ranges[i] {
                Range::Basis => {
                    if let Some(&b) = comp.get(k as usize) {
                        x[b] = ctx.one();
                    }
                }
                Range::Full => {
                    let q = ctx.q() as u128;
                    let mut k = k;
                    for &b in comp {
                        x[b] = ctx.element((k % q) as usize);
                        k /= q;
                    }
                }
            }
            out[i] = x;
        }
        out
    }
}
