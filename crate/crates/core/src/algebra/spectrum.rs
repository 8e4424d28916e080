use serde_json::{json, Value};

use crate::field::{FieldContext, FieldElement};
use crate::linalg::{self, Echelon, Vector};

use super::{GradedAlgebra, Subspace};

/// Spectral data of `ad u` (acting as `y ↦ [y, u]`).
#[derive(Debug, Clone)]
pub struct SpectrumReport {
    pub element: Vector,
    /// Monic, lowest degree coefficient first.
    pub min_poly: Vec<FieldElement>,
    pub eigenvalues: Vec<FieldElement>,
    pub eigenspaces: Vec<Subspace>,
    pub diagonalizable: bool,
    pub homogeneous_eigenbasis: bool,
}

impl SpectrumReport {
    pub fn to_json(&self, alg: &GradedAlgebra) -> Value {
        let ctx = alg.ctx();
        json!({
            "element": alg.format_element(&self.element),
            "min_poly": poly_to_string(ctx, &self.min_poly),
            "eigenvalues": self.eigenvalues.iter().map(|&e| ctx.format(e)).collect::<Vec<_>>(),
            "eigenspaces": self.eigenspaces.iter().map(|s| s.describe(alg)).collect::<Vec<_>>(),
            "diagonalizable": self.diagonalizable,
            "homogeneous_eigenbasis": self.homogeneous_eigenbasis,
        })
    }
}

/// Minimal polynomial of a square matrix: the first linear dependency
/// among `I, M, M², …` viewed as flat vectors.
pub fn min_poly(ctx: &FieldContext, m: &linalg::Matrix) -> Vec<FieldElement> {
    let n = m.len();
    let flat = |a: &linalg::Matrix| -> Vector { a.iter().flatten().copied().collect() };
    let mut powers: Vec<Vector> = Vec::new();
    let mut cur = linalg::identity(ctx, n);
    loop {
        let v = flat(&cur);
        if let Some(coords) = linalg::solve_in_span(ctx, &powers, &v) {
            // M^d = Σ c_i M^i, so the polynomial is t^d − Σ c_i t^i
            let mut p: Vec<FieldElement> = coords.iter().map(|&c| ctx.neg(c)).collect();
            p.push(ctx.one());
            return p;
        }
        powers.push(v);
        cur = linalg::mat_mul(ctx, &cur, m);
    }
}

fn eval(ctx: &FieldContext, p: &[FieldElement], x: FieldElement) -> FieldElement {
    p.iter().rev().fold(ctx.zero(), |acc, &c| ctx.mul_add(c, acc, x))
}

pub fn spectrum(alg: &GradedAlgebra, u: &[FieldElement]) -> SpectrumReport {
    let ctx = alg.ctx();
    let n = alg.dim();
    let m = alg.ad_matrix(u);
    let mp = min_poly(ctx, &m);
    let eigenvalues: Vec<FieldElement> = ctx.elements().filter(|&x| eval(ctx, &mp, x).is_zero()).collect();
    let eigenspaces: Vec<Subspace> = eigenvalues
        .iter()
        .map(|&lambda| {
            let rows = m.iter().enumerate().map(|(i, row)| {
                let mut r = row.clone();
                r[i] = ctx.sub(r[i], lambda);
                r
            });
            Subspace::from_echelon(Echelon::from_rows(ctx, n, rows).null_space(ctx))
        })
        .collect();
    let diagonalizable = eigenspaces.iter().map(Subspace::dim).sum::<usize>() == n;
    let components: Vec<Subspace> = alg
        .grade_support()
        .iter()
        .map(|g| Subspace::span(ctx, n, alg.component(g).into_iter().map(|i| alg.basis(i))))
        .collect();
    let homogeneous_eigenbasis = eigenspaces.iter().all(|e| {
        components.iter().map(|c| e.intersect(ctx, c).dim()).sum::<usize>() == e.dim()
    });
    SpectrumReport {
        element: u.to_vec(),
        min_poly: mp,
        eigenvalues,
        eigenspaces,
        diagonalizable,
        homogeneous_eigenbasis,
    }
}

fn poly_mul_mod(ctx: &FieldContext, a: &[FieldElement], b: &[FieldElement], m: &[FieldElement]) -> Vec<FieldElement> {
    let mut prod = vec![ctx.zero(); a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = ctx.mul_add(prod[i + j], x, y);
        }
    }
    poly_rem(ctx, &prod, m)
}

/// Remainder of `a` modulo the monic polynomial `m`.
pub fn poly_rem(ctx: &FieldContext, a: &[FieldElement], m: &[FieldElement]) -> Vec<FieldElement> {
    let d = m.len() - 1;
    let mut r = a.to_vec();
    while r.len() > d {
        let lead = r.pop().expect("nonempty");
        if lead.is_zero() {
            continue;
        }
        let off = r.len() - d;
        for (i, &c) in m[..d].iter().enumerate() {
            r[off + i] = ctx.sub(r[off + i], ctx.mul(lead, c));
        }
    }
    while r.last().is_some_and(|c| c.is_zero()) {
        r.pop();
    }
    r
}

/// Whether the monic polynomial `p` divides `t^q − t`.
pub fn divides_frobenius(ctx: &FieldContext, p: &[FieldElement]) -> bool {
    if p.len() <= 1 {
        return true;
    }
    let mut result = vec![ctx.one()];
    let mut base = poly_rem(ctx, &[ctx.zero(), ctx.one()], p);
    let mut e = ctx.q();
    while e > 0 {
        if e & 1 == 1 {
            result = poly_mul_mod(ctx, &result, &base, p);
        }
        base = poly_mul_mod(ctx, &base, &base, p);
        e >>= 1;
    }
    let t = poly_rem(ctx, &[ctx.zero(), ctx.one()], p);
    let len = result.len().max(t.len());
    (0..len).all(|i| {
        let a = result.get(i).copied().unwrap_or(ctx.zero());
        let b = t.get(i).copied().unwrap_or(ctx.zero());
        a == b
    })
}

/// `t^3 + t`, highest degree first.
pub fn poly_to_string(ctx: &FieldContext, p: &[FieldElement]) -> String {
    let mut parts = Vec::new();
    for (i, &c) in p.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{i}"),
        };
        let coef = ctx.format(c);
        parts.push(match (c == ctx.one(), i) {
            (_, 0) => coef,
            (true, _) => mono,
            (false, _) if coef.contains('+') => format!("({coef})*{mono}"),
            (false, _) => format!("{coef}*{mono}"),
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}
