use crate::field::{FieldContext, FieldElement};
use crate::linalg::{self, solve_in_span, Echelon, Matrix, Vector};

use super::{AlgebraError, GradeGroup, GroupElement};

/// A 2×2 matrix over GF(q), row-major.
pub type Mat2 = [[FieldElement; 2]; 2];

/// Lie algebra given by structure constants `[b_i, b_j] = Σ_k c[i][j][k] b_k`
/// on a homogeneous basis.
#[derive(Debug, Clone)]
pub struct GradedAlgebra {
    name: String,
    ctx: FieldContext,
    labels: Vec<String>,
    structure: Vec<FieldElement>,
    group: GradeGroup,
    grades: Vec<GroupElement>,
    matrices: Option<Vec<Mat2>>,
}

impl GradedAlgebra {
    /// Validate antisymmetry, Jacobi, and grading compatibility.
    ///
    /// `structure` is indexed `(i * n + j) * n + k`.
    pub fn new(
        name: impl Into<String>,
        ctx: FieldContext,
        labels: Vec<String>,
        structure: Vec<FieldElement>,
        group: GradeGroup,
        grades: Vec<GroupElement>,
    ) -> Result<GradedAlgebra, AlgebraError> {
        let n = labels.len();
        if structure.len() != n * n * n || grades.len() != n {
            return Err(AlgebraError::Parse(format!(
                "structure/grades do not match dimension {n}"
            )));
        }
        let alg = GradedAlgebra {
            name: name.into(),
            ctx,
            labels,
            structure,
            group,
            grades,
            matrices: None,
        };
        alg.validate()?;
        Ok(alg)
    }

    /// Build from 2×2 matrices spanning a subalgebra of gl₂; structure
    /// constants are read off the matrix commutators.
    pub fn from_matrices(
        name: impl Into<String>,
        ctx: FieldContext,
        labels: Vec<String>,
        matrices: Vec<Mat2>,
        group: GradeGroup,
        grades: Vec<GroupElement>,
    ) -> Result<GradedAlgebra, AlgebraError> {
        let n = matrices.len();
        let flat: Vec<Vector> = matrices.iter().map(flatten).collect();
        if Echelon::from_rows(&ctx, 4, flat.iter().cloned()).rank() != n {
            return Err(AlgebraError::LinearlyDependent);
        }
        let mut structure = vec![ctx.zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                let c = commutator(&ctx, &matrices[i], &matrices[j]);
                let coords = solve_in_span(&ctx, &flat, &flatten(&c))
                    .ok_or(AlgebraError::NotClosed { i, j })?;
                structure[(i * n + j) * n..(i * n + j + 1) * n].copy_from_slice(&coords);
            }
        }
        let mut alg = GradedAlgebra::new(name, ctx, labels, structure, group, grades)?;
        alg.matrices = Some(matrices);
        Ok(alg)
    }

    fn validate(&self) -> Result<(), AlgebraError> {
        let n = self.dim();
        let f = &self.ctx;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let a = self.c(i, j, k);
                    if f.add(a, self.c(j, i, k)) != f.zero() || (i == j && !a.is_zero()) {
                        return Err(AlgebraError::Antisymmetry { i, j, k });
                    }
                    if !a.is_zero()
                        && self.grades[k] != self.group.add(&self.grades[i], &self.grades[j])
                    {
                        return Err(AlgebraError::GradingViolation { i, j, k });
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    let (bi, bj, bl) = (self.basis(i), self.basis(j), self.basis(l));
                    let mut s = self.bracket(&self.bracket(&bi, &bj), &bl);
                    let t = self.bracket(&self.bracket(&bj, &bl), &bi);
                    let u = self.bracket(&self.bracket(&bl, &bi), &bj);
                    linalg::add_scaled(f, &mut s, f.one(), &t);
                    linalg::add_scaled(f, &mut s, f.one(), &u);
                    if !linalg::is_zero_vec(&s) {
                        return Err(AlgebraError::JacobiViolation { i, j, l });
                    }
                }
            }
        }
        Ok(())
    }

    #[inline]
    fn c(&self, i: usize, j: usize, k: usize) -> FieldElement {
        let n = self.dim();
        self.structure[(i * n + j) * n + k]
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> GradedAlgebra {
        self.name = name.into();
        self
    }

    pub fn ctx(&self) -> &FieldContext {
        &self.ctx
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn group(&self) -> &GradeGroup {
        &self.group
    }

    pub fn grade(&self, i: usize) -> &GroupElement {
        &self.grades[i]
    }

    pub fn grades(&self) -> &[GroupElement] {
        &self.grades
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> FieldElement {
        self.c(i, j, k)
    }

    /// The 2×2 matrix realization, when the algebra was built from one.
    pub fn matrices(&self) -> Option<&[Mat2]> {
        self.matrices.as_deref()
    }

    pub fn basis(&self, i: usize) -> Vector {
        linalg::unit(&self.ctx, self.dim(), i)
    }

    pub fn zero_vector(&self) -> Vector {
        linalg::zeros(&self.ctx, self.dim())
    }

    /// Basis indices whose grade is `g` (possibly none).
    pub fn component(&self, g: &GroupElement) -> Vec<usize> {
        (0..self.dim()).filter(|&i| &self.grades[i] == g).collect()
    }

    /// Distinct grades carried by basis vectors, sorted.
    pub fn grade_support(&self) -> Vec<GroupElement> {
        let mut gs = self.grades.clone();
        gs.sort();
        gs.dedup();
        gs
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, u: &[FieldElement], v: &[FieldElement]) -> Vector {
        let n = self.dim();
        let f = &self.ctx;
        let mut out = self.zero_vector();
        for (i, &ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, &vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let w = f.mul(ui, vj);
                let row = &self.structure[(i * n + j) * n..(i * n + j + 1) * n];
                linalg::add_scaled(f, &mut out, w, row);
            }
        }
        out
    }

    /// Matrix of `y ↦ [y, u]`: column j holds `[b_j, u]`, so that
    /// `y·f(ad u)` is iterated right-bracketing by `u`.
    pub fn ad_matrix(&self, u: &[FieldElement]) -> Matrix {
        let n = self.dim();
        let f = &self.ctx;
        let mut m = vec![self.zero_vector(); n];
        for j in 0..n {
            for (i, &ui) in u.iter().enumerate() {
                if ui.is_zero() {
                    continue;
                }
                for (k, row) in m.iter_mut().enumerate() {
                    row[j] = f.mul_add(row[j], ui, self.c(j, i, k));
                }
            }
        }
        m
    }

    /// Same field and grading group.
    pub fn compatible(&self, other: &GradedAlgebra) -> bool {
        self.ctx == other.ctx && self.group == other.group
    }

    /// `A × B` with componentwise bracket and the shared grading group.
    pub fn direct_product(
        &self,
        other: &GradedAlgebra,
        name: impl Into<String>,
    ) -> Result<GradedAlgebra, AlgebraError> {
        if !self.compatible(other) {
            return Err(AlgebraError::Incompatible);
        }
        let (n, m) = (self.dim(), other.dim());
        let d = n + m;
        let mut structure = vec![self.ctx.zero(); d * d * d];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    structure[(i * d + j) * d + k] = self.c(i, j, k);
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    structure[((n + i) * d + n + j) * d + n + k] = other.c(i, j, k);
                }
            }
        }
        let mut labels = self.labels.clone();
        for l in &other.labels {
            let mut l = l.clone();
            while labels.contains(&l) {
                l.push('\'');
            }
            labels.push(l);
        }
        let grades = self.grades.iter().chain(&other.grades).cloned().collect();
        GradedAlgebra::new(name, self.ctx.clone(), labels, structure, self.group.clone(), grades)
    }

    /// The same Lie algebra with every basis vector in degree 0 of the trivial group.
    pub fn ungraded(&self) -> GradedAlgebra {
        GradedAlgebra {
            name: self.name.clone(),
            ctx: self.ctx.clone(),
            labels: self.labels.clone(),
            structure: self.structure.clone(),
            group: GradeGroup::trivial(),
            grades: vec![GradeGroup::trivial().zero(); self.dim()],
            matrices: self.matrices.clone(),
        }
    }

    /// Re-express in the basis given by the rows of `p` (which must be
    /// invertible).  The result carries the trivial grading.
    pub fn change_basis(&self, p: &Matrix) -> Result<GradedAlgebra, AlgebraError> {
        let n = self.dim();
        if p.len() != n || Echelon::from_rows(&self.ctx, n, p.iter().cloned()).rank() != n {
            return Err(AlgebraError::LinearlyDependent);
        }
        let mut structure = vec![self.ctx.zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                let b = self.bracket(&p[i], &p[j]);
                let coords = solve_in_span(&self.ctx, p, &b).expect("basis spans the algebra");
                structure[(i * n + j) * n..(i * n + j + 1) * n].copy_from_slice(&coords);
            }
        }
        let labels = (0..n).map(|i| format!("f{}", i + 1)).collect();
        let group = GradeGroup::trivial();
        let grades = vec![group.zero(); n];
        GradedAlgebra::new(format!("{}'", self.name), self.ctx.clone(), labels, structure, group, grades)
    }

    /// Parse a linear combination of basis labels such as `2*h + e12 - e21`.
    pub fn parse_element(&self, text: &str) -> Result<Vector, AlgebraError> {
        let bad = || AlgebraError::BadElement(text.to_string());
        let mut v = self.zero_vector();
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(bad());
        }
        if s == "0" {
            return Ok(v);
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in s.char_indices() {
            if (ch == '+' || ch == '-') && i > start {
                terms.push(&s[start..i]);
                start = i;
            }
        }
        terms.push(&s[start..]);
        for term in terms {
            let (sign, body) = match term.strip_prefix('-') {
                Some(b) => (-1i64, b),
                None => (1, term.strip_prefix('+').unwrap_or(term)),
            };
            let (coef, label) = match body.split_once('*') {
                Some((c, l)) => (c.parse::<i64>().map_err(|_| bad())?, l),
                None => (1, body),
            };
            let idx = self.labels.iter().position(|l| l == label).ok_or_else(bad)?;
            let c = self.ctx.from_i64(sign * coef);
            v[idx] = self.ctx.add(v[idx], c);
        }
        Ok(v)
    }

    /// Render a coordinate vector as a combination of basis labels.
    pub fn format_element(&self, v: &[FieldElement]) -> String {
        let mut parts = Vec::new();
        for (i, &c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c == self.ctx.one() {
                parts.push(self.labels[i].clone());
            } else {
                parts.push(format!("{}*{}", self.ctx.format(c), self.labels[i]));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }

    /// Nonzero structure constants as `(i, j, k, c)` with `i < j`.
    pub fn structure_triples(&self) -> Vec<(usize, usize, usize, FieldElement)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        out.push((i, j, k, c));
                    }
                }
            }
        }
        out
    }
}

pub(crate) fn flatten(m: &Mat2) -> Vector {
    vec![m[0][0], m[0][1], m[1][0], m[1][1]]
}

pub(crate) fn mat2_mul(ctx: &FieldContext, a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[ctx.zero(); 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = ctx.add(ctx.mul(a[i][0], b[0][j]), ctx.mul(a[i][1], b[1][j]));
        }
    }
    out
}

/// `ab − ba`
pub(crate) fn commutator(ctx: &FieldContext, a: &Mat2, b: &Mat2) -> Mat2 {
    let ab = mat2_mul(ctx, a, b);
    let ba = mat2_mul(ctx, b, a);
    let mut out = [[ctx.zero(); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = ctx.sub(ab[i][j], ba[i][j]);
        }
    }
    out
}
