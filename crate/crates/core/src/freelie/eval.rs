use std::collections::BTreeMap;

use crate::algebra::GradedAlgebra;
use crate::field::{FieldContext, FieldElement};
use crate::linalg::{self, Matrix, Vector};

use super::lyndon::standard_factorization;
use super::normalize::{LiePoly, Limits, Normalizer};
use super::{Expr, FreeLieError, GradedVar, GradingProfile};

/// A Lie algebra in which expression trees can be evaluated.
pub trait LieValues {
    type V: Clone;

    fn field(&self) -> &FieldContext;
    fn zero(&self) -> Self::V;
    fn var(&self, v: GradedVar) -> Result<Self::V, FreeLieError>;
    /// `acc += c·x`
    fn add_scaled(&self, acc: &mut Self::V, c: FieldElement, x: &Self::V);
    fn bracket(&self, a: &Self::V, b: &Self::V) -> Result<Self::V, FreeLieError>;

    /// `base·(ad op)^exp`
    fn ad_pow(&self, base: &Self::V, op: &Self::V, exp: u64) -> Result<Self::V, FreeLieError> {
        let mut acc = base.clone();
        for _ in 0..exp {
            acc = self.bracket(&acc, op)?;
        }
        Ok(acc)
    }
}

/// Structural evaluation of a tree.
pub fn evaluate_with<L: LieValues>(values: &L, expr: &Expr) -> Result<L::V, FreeLieError> {
    match expr {
        Expr::Var(v) => values.var(*v),
        Expr::Scaled(c, e) => {
            let x = evaluate_with(values, e)?;
            let mut acc = values.zero();
            values.add_scaled(&mut acc, values.field().from_i64(*c), &x);
            Ok(acc)
        }
        Expr::Sum(items) => {
            let mut acc = values.zero();
            for e in items {
                let x = evaluate_with(values, e)?;
                values.add_scaled(&mut acc, values.field().one(), &x);
            }
            Ok(acc)
        }
        Expr::Bracket(a, b) => {
            let x = evaluate_with(values, a)?;
            let y = evaluate_with(values, b)?;
            values.bracket(&x, &y)
        }
        Expr::AdPow { base, op, exp } => {
            let x = evaluate_with(values, base)?;
            let y = evaluate_with(values, op)?;
            values.ad_pow(&x, &y, *exp)
        }
    }
}

/// A finite-dimensional algebra with values for the variables.
pub struct AlgebraValues<'a> {
    alg: &'a GradedAlgebra,
    vars: Vec<GradedVar>,
    values: Vec<Vector>,
}

impl<'a> AlgebraValues<'a> {
    /// Checks that each value lies in the component of its variable's grade.
    pub fn new(
        alg: &'a GradedAlgebra,
        profile: &GradingProfile,
        assignment: &BTreeMap<GradedVar, Vector>,
    ) -> Result<AlgebraValues<'a>, FreeLieError> {
        for (&v, x) in assignment {
            let g = profile.grade_of(v)?;
            let ok = x
                .iter()
                .enumerate()
                .all(|(i, c)| c.is_zero() || alg.grade(i) == &g);
            if !ok || x.len() != alg.dim() {
                return Err(FreeLieError::GradeMismatch {
                    var: v.to_string(),
                    expected: g.to_string(),
                });
            }
        }
        Ok(Self::unchecked(alg, assignment.keys().copied().collect(), assignment.values().cloned().collect()))
    }

    /// Values known to be homogeneous of the right grade.
    pub fn unchecked(alg: &'a GradedAlgebra, vars: Vec<GradedVar>, values: Vec<Vector>) -> AlgebraValues<'a> {
        AlgebraValues { alg, vars, values }
    }
}

fn mat_pow(ctx: &FieldContext, m: &Matrix, mut e: u64) -> Matrix {
    let mut result = linalg::identity(ctx, m.len());
    let mut base = m.clone();
    while e > 0 {
        if e & 1 == 1 {
            result = linalg::mat_mul(ctx, &result, &base);
        }
        e >>= 1;
        if e > 0 {
            base = linalg::mat_mul(ctx, &base, &base);
        }
    }
    result
}

impl LieValues for AlgebraValues<'_> {
    type V = Vector;

    fn field(&self) -> &FieldContext {
        self.alg.ctx()
    }

    fn zero(&self) -> Vector {
        self.alg.zero_vector()
    }

    fn var(&self, v: GradedVar) -> Result<Vector, FreeLieError> {
        self.vars
            .iter()
            .position(|&w| w == v)
            .map(|i| self.values[i].clone())
            .ok_or_else(|| FreeLieError::Unassigned(v.to_string()))
    }

    fn add_scaled(&self, acc: &mut Vector, c: FieldElement, x: &Vector) {
        linalg::add_scaled(self.alg.ctx(), acc, c, x);
    }

    fn bracket(&self, a: &Vector, b: &Vector) -> Result<Vector, FreeLieError> {
        Ok(self.alg.bracket(a, b))
    }

    fn ad_pow(&self, base: &Vector, op: &Vector, exp: u64) -> Result<Vector, FreeLieError> {
        let ctx = self.alg.ctx();
        if linalg::is_zero_vec(base) || exp == 0 {
            return Ok(base.clone());
        }
        let m = self.alg.ad_matrix(op);
        if exp as usize <= 2 * m.len() {
            let mut acc = base.clone();
            for _ in 0..exp {
                acc = linalg::mat_vec(ctx, &m, &acc);
            }
            return Ok(acc);
        }
        Ok(linalg::mat_vec(ctx, &mat_pow(ctx, &m, exp), base))
    }
}

/// The free Lie algebra, with variables mapped to free-algebra elements.
pub struct FreeValues<'a> {
    norm: &'a Normalizer,
    ctx: &'a FieldContext,
    limits: Limits,
    assignment: Option<BTreeMap<GradedVar, LiePoly>>,
}

impl<'a> FreeValues<'a> {
    /// Each variable is its own letter.
    pub fn identity(norm: &'a Normalizer, ctx: &'a FieldContext, limits: Limits) -> FreeValues<'a> {
        FreeValues {
            norm,
            ctx,
            limits,
            assignment: None,
        }
    }

    /// Variables replaced by the given elements (an endomorphism of the free algebra).
    pub fn substituting(
        norm: &'a Normalizer,
        ctx: &'a FieldContext,
        limits: Limits,
        assignment: BTreeMap<GradedVar, LiePoly>,
    ) -> FreeValues<'a> {
        FreeValues {
            norm,
            ctx,
            limits,
            assignment: Some(assignment),
        }
    }
}

impl LieValues for FreeValues<'_> {
    type V = LiePoly;

    fn field(&self) -> &FieldContext {
        self.ctx
    }

    fn zero(&self) -> LiePoly {
        LiePoly::zero()
    }

    fn var(&self, v: GradedVar) -> Result<LiePoly, FreeLieError> {
        match &self.assignment {
            None => Ok(LiePoly::letter(v, self.ctx)),
            Some(a) => a.get(&v).cloned().ok_or_else(|| FreeLieError::Unassigned(v.to_string())),
        }
    }

    fn add_scaled(&self, acc: &mut LiePoly, c: FieldElement, x: &LiePoly) {
        acc.add_scaled(self.ctx, c, x);
    }

    fn bracket(&self, a: &LiePoly, b: &LiePoly) -> Result<LiePoly, FreeLieError> {
        self.norm
            .bracket(self.ctx, a, b, &self.limits)
            .ok_or(FreeLieError::OutOfBounds)
    }

    fn ad_pow(&self, base: &LiePoly, op: &LiePoly, exp: u64) -> Result<LiePoly, FreeLieError> {
        let mut acc = base.clone();
        for _ in 0..exp {
            if acc.is_zero() {
                break;
            }
            acc = self.bracket(&acc, op)?;
        }
        Ok(acc)
    }
}

/// Structural evaluation with grade-checked values.
pub fn evaluate(
    expr: &Expr,
    alg: &GradedAlgebra,
    profile: &GradingProfile,
    assignment: &BTreeMap<GradedVar, Vector>,
) -> Result<Vector, FreeLieError> {
    evaluate_with(&AlgebraValues::new(alg, profile, assignment)?, expr)
}

/// Value of a free-algebra element: each Lyndon word through its standard
/// bracketing.
pub fn evaluate_poly<L: LieValues>(values: &L, p: &LiePoly) -> Result<L::V, FreeLieError> {
    fn word<L: LieValues>(values: &L, w: &[GradedVar]) -> Result<L::V, FreeLieError> {
        match standard_factorization(w) {
            None => values.var(w[0]),
            Some((u, v)) => values.bracket(&word(values, u)?, &word(values, v)?),
        }
    }
    let mut acc = values.zero();
    for (w, c) in p.terms() {
        let x = word(values, w)?;
        values.add_scaled(&mut acc, c, &x);
    }
    Ok(acc)
}

/// Evaluation through the Lyndon normal form.
pub fn evaluate_normal_form(
    expr: &Expr,
    alg: &GradedAlgebra,
    profile: &GradingProfile,
    assignment: &BTreeMap<GradedVar, Vector>,
    cap: u32,
) -> Result<Vector, FreeLieError> {
    let p = Normalizer::global().normalize(alg.ctx(), expr, cap)?;
    evaluate_poly(&AlgebraValues::new(alg, profile, assignment)?, &p)
}
