//! JSON algebra descriptions.
//!
//! ```json
//! { "field": "5", "group": [2], "basis": ["h", "e12", "e21"],
//!   "grades": [[0], [1], [1]],
//!   "matrices": [[[1,0],[0,-1]], [[0,1],[0,0]], [[0,0],[1,0]]] }
//! ```
//!
//! Instead of `matrices`, `structure` may list `[i, j, k, c]` meaning
//! `[b_i, b_j]` has coefficient `c` on `b_k` (indices from 0).  A missing
//! `[j, i, k, ·]` entry is filled in by antisymmetry.  Coefficients over
//! GF(p²) may be written `[a0, a1]` for `a0 + a1·t`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::field::{FieldContext, FieldElement};

use super::{AlgebraError, GradeGroup, GradedAlgebra, Mat2};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Pair([i64; 2]),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Text(String),
    Prime(u32),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    #[serde(default)]
    pub name: Option<String>,
    pub field: FieldSpec,
    pub group: Vec<u32>,
    pub basis: Vec<String>,
    pub grades: Vec<Vec<i64>>,
    #[serde(default)]
    pub matrices: Option<Vec<[[Scalar; 2]; 2]>>,
    #[serde(default)]
    pub structure: Option<Vec<(usize, usize, usize, Scalar)>>,
}

fn scalar(ctx: &FieldContext, s: &Scalar) -> FieldElement {
    match s {
        Scalar::Int(a) => ctx.from_i64(*a),
        Scalar::Pair(c) => ctx.from_coeffs(c),
    }
}

impl AlgebraFile {
    pub fn field(&self) -> Result<FieldContext, AlgebraError> {
        Ok(match &self.field {
            FieldSpec::Text(s) => FieldContext::from_spec(s)?,
            FieldSpec::Prime(p) => FieldContext::from_spec(&p.to_string())?,
        })
    }

    pub fn build(&self, default_name: &str) -> Result<GradedAlgebra, AlgebraError> {
        let ctx = self.field()?;
        let group = GradeGroup::new(self.group.clone())?;
        let n = self.basis.len();
        if self.grades.len() != n {
            return Err(AlgebraError::Parse(format!(
                "{} grades for {n} basis elements",
                self.grades.len()
            )));
        }
        let grades = self
            .grades
            .iter()
            .map(|g| group.element(g))
            .collect::<Result<Vec<_>, _>>()?;
        let name = self.name.clone().unwrap_or_else(|| default_name.to_string());
        match (&self.matrices, &self.structure) {
            (Some(ms), None) => {
                if ms.len() != n {
                    return Err(AlgebraError::Parse(format!(
                        "{} matrices for {n} basis elements",
                        ms.len()
                    )));
                }
                let mats: Vec<Mat2> = ms
                    .iter()
                    .map(|m| {
                        [
                            [scalar(&ctx, &m[0][0]), scalar(&ctx, &m[0][1])],
                            [scalar(&ctx, &m[1][0]), scalar(&ctx, &m[1][1])],
                        ]
                    })
                    .collect();
                GradedAlgebra::from_matrices(name, ctx, self.basis.clone(), mats, group, grades)
            }
            (None, Some(triples)) => {
                let at = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
                let mut given = vec![None; n * n * n];
                for (i, j, k, c) in triples {
                    if *i >= n || *j >= n || *k >= n {
                        return Err(AlgebraError::Parse(format!(
                            "structure entry [{i}, {j}, {k}] out of range"
                        )));
                    }
                    given[at(*i, *j, *k)] = Some(scalar(&ctx, c));
                }
                let mut structure = vec![ctx.zero(); n * n * n];
                for i in 0..n {
                    for j in 0..n {
                        for k in 0..n {
                            structure[at(i, j, k)] = match (given[at(i, j, k)], given[at(j, i, k)]) {
                                (Some(c), _) => c,
                                (None, Some(c)) => ctx.neg(c),
                                (None, None) => ctx.zero(),
                            };
                        }
                    }
                }
                GradedAlgebra::new(name, ctx, self.basis.clone(), structure, group, grades)
            }
            _ => Err(AlgebraError::Parse(
                "exactly one of `matrices` and `structure` is required".into(),
            )),
        }
    }
}

pub fn parse_algebra(text: &str, default_name: &str) -> Result<GradedAlgebra, AlgebraError> {
    let file: AlgebraFile =
        serde_json::from_str(text).map_err(|e| AlgebraError::Parse(e.to_string()))?;
    file.build(default_name)
}

pub fn load_algebra(path: &Path) -> Result<GradedAlgebra, AlgebraError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AlgebraError::Parse(format!("{}: {e}", path.display())))?;
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "algebra".into());
    parse_algebra(&text, &stem)
}
