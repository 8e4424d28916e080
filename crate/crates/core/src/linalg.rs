//! Dense linear algebra over GF(q): reduced row echelon forms, null spaces,
//! and the small matrix helpers the structural analyses need.

use crate::field::{FieldContext, FieldElement};

pub type Vector = Vec<FieldElement>;

/// A row space kept in reduced row echelon form.
///
/// Rows are sorted by pivot column and every pivot column is zero outside
/// its own row, so two echelons over the same field span the same space
/// iff they are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Echelon {
    cols: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(cols: usize) -> Echelon {
        Echelon {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows<I>(ctx: &FieldContext, cols: usize, rows: I) -> Echelon
    where
        I: IntoIterator<Item = Vector>,
    {
        let mut e = Echelon::new(cols);
        for r in rows {
            e.insert(ctx, r);
        }
        e
    }

    /// The whole space `GF(q)^cols`.
    pub fn full(ctx: &FieldContext, cols: usize) -> Echelon {
        Echelon::from_rows(ctx, cols, (0..cols).map(|i| unit(ctx, cols, i)))
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtract pivot rows from `v` in place, leaving the canonical remainder.
    pub fn reduce(&self, ctx: &FieldContext, v: &mut [FieldElement]) {
        debug_assert_eq!(v.len(), self.cols);
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c.is_zero() {
                continue;
            }
            let nc = ctx.neg(c);
            for (x, &r) in v[pc..].iter_mut().zip(&row[pc..]) {
                if !r.is_zero() {
                    *x = ctx.mul_add(*x, nc, r);
                }
            }
        }
    }

    pub fn contains(&self, ctx: &FieldContext, v: &[FieldElement]) -> bool {
        let mut w = v.to_vec();
        self.reduce(ctx, &mut w);
        w.iter().all(|x| x.is_zero())
    }

    /// Add `v` to the span.  Returns `true` when the rank grew.
    pub fn insert(&mut self, ctx: &FieldContext, mut v: Vector) -> bool {
        assert_eq!(v.len(), self.cols, "row length mismatch");
        self.reduce(ctx, &mut v);
        let Some(pc) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let s = ctx.inv(v[pc]).expect("pivot is nonzero");
        for x in v[pc..].iter_mut() {
            *x = ctx.mul(*x, s);
        }
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if c.is_zero() {
                continue;
            }
            let nc = ctx.neg(c);
            for (x, &r) in row[pc..].iter_mut().zip(&v[pc..]) {
                if !r.is_zero() {
                    *x = ctx.mul_add(*x, nc, r);
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < pc);
        self.pivots.insert(at, pc);
        self.rows.insert(at, v);
        true
    }

    /// Merge another row space into this one.
    pub fn extend(&mut self, ctx: &FieldContext, other: &Echelon) {
        for r in &other.rows {
            self.insert(ctx, r.clone());
        }
    }

    pub fn sum(&self, ctx: &FieldContext, other: &Echelon) -> Echelon {
        let mut e = self.clone();
        e.extend(ctx, other);
        e
    }

    /// `{x : r·x = 0 for every row r}` in canonical form.
    pub fn null_space(&self, ctx: &FieldContext) -> Echelon {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let basis = (0..self.cols).filter(|&f| !is_pivot[f]).map(|f| {
            let mut x = vec![ctx.zero(); self.cols];
            x[f] = ctx.one();
            for (row, &pc) in self.rows.iter().zip(&self.pivots) {
                x[pc] = ctx.neg(row[f]);
            }
            x
        });
        Echelon::from_rows(ctx, self.cols, basis)
    }

    pub fn intersect(&self, ctx: &FieldContext, other: &Echelon) -> Echelon {
        // A ∩ B = (A⊥ + B⊥)⊥ for the standard dot product
        self.null_space(ctx)
            .sum(ctx, &other.null_space(ctx))
            .null_space(ctx)
    }

    pub fn is_subspace_of(&self, ctx: &FieldContext, other: &Echelon) -> bool {
        self.rows.iter().all(|r| other.contains(ctx, r))
    }
}

pub fn zeros(ctx: &FieldContext, n: usize) -> Vector {
    vec![ctx.zero(); n]
}

pub fn unit(ctx: &FieldContext, n: usize, i: usize) -> Vector {
    let mut v = zeros(ctx, n);
    v[i] = ctx.one();
    v
}

pub fn is_zero_vec(v: &[FieldElement]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn add_scaled(ctx: &FieldContext, acc: &mut [FieldElement], c: FieldElement, v: &[FieldElement]) {
    if c.is_zero() {
        return;
    }
    for (a, &x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = ctx.mul_add(*a, c, x);
        }
    }
}

pub fn scale(ctx: &FieldContext, c: FieldElement, v: &[FieldElement]) -> Vector {
    v.iter().map(|&x| ctx.mul(c, x)).collect()
}

/// Square matrix stored as rows.
pub type Matrix = Vec<Vector>;

pub fn identity(ctx: &FieldContext, n: usize) -> Matrix {
    (0..n).map(|i| unit(ctx, n, i)).collect()
}

pub fn mat_vec(ctx: &FieldContext, m: &Matrix, v: &[FieldElement]) -> Vector {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(ctx.zero(), |acc, (&a, &b)| ctx.mul_add(acc, a, b))
        })
        .collect()
}

pub fn mat_mul(ctx: &FieldContext, a: &Matrix, b: &Matrix) -> Matrix {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            let mut out = zeros(ctx, n);
            for (k, &c) in row.iter().enumerate() {
                add_scaled(ctx, &mut out, c, &b[k]);
            }
            out
        })
        .collect()
}

/// Coordinates of `v` in terms of `basis` (assumed independent), if `v` lies in their span.
pub fn solve_in_span(
    ctx: &FieldContext,
    basis: &[Vector],
    v: &[FieldElement],
) -> Option<Vector> {
    let k = basis.len();
    let n = v.len();
    // rows of [B | v] where B has the basis vectors as columns
    let rows = (0..n).map(|i| {
        let mut r: Vector = basis.iter().map(|b| b[i]).collect();
        r.push(v[i]);
        r
    });
    let e = Echelon::from_rows(ctx, k + 1, rows);
    if e.pivots().last() == Some(&k) {
        return None;
    }
    let mut x = zeros(ctx, k);
    for (row, &pc) in e.rows().iter().zip(e.pivots()) {
        x[pc] = row[k];
    }
    Some(x)
}
