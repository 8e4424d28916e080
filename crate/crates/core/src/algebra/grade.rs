use std::fmt;

use serde::{Deserialize, Serialize};

use super::AlgebraError;

/// A finitely generated abelian group `Z_{m1} × … × Z_{mr}`; modulus 0 stands for `Z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradeGroup {
    moduli: Vec<u32>,
}

/// Coordinates reduced into `[0, m)` for every finite coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement(Vec<i64>);

impl GradeGroup {
    pub fn new(moduli: Vec<u32>) -> Result<GradeGroup, AlgebraError> {
        match moduli.as_slice() {
            [] | [2] | [3] | [2, 2] | [0] => Ok(GradeGroup { moduli }),
            _ => Err(AlgebraError::UnsupportedGroup(moduli)),
        }
    }

    pub fn trivial() -> GradeGroup {
        GradeGroup { moduli: vec![] }
    }

    pub fn z2() -> GradeGroup {
        GradeGroup { moduli: vec![2] }
    }

    pub fn z3() -> GradeGroup {
        GradeGroup { moduli: vec![3] }
    }

    pub fn z2z2() -> GradeGroup {
        GradeGroup { moduli: vec![2, 2] }
    }

    pub fn integers() -> GradeGroup {
        GradeGroup { moduli: vec![0] }
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    pub fn arity(&self) -> usize {
        self.moduli.len()
    }

    /// Group order, `None` for `Z`.
    pub fn order(&self) -> Option<u32> {
        self.moduli
            .iter()
            .try_fold(1u32, |acc, &m| if m == 0 { None } else { Some(acc * m) })
    }

    pub fn name(&self) -> &'static str {
        match self.moduli.as_slice() {
            [] => "trivial",
            [2] => "Z2",
            [3] => "Z3",
            [2, 2] => "Z2xZ2",
            [0] => "Z",
            _ => unreachable!("unsupported groups are rejected at construction"),
        }
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.arity()])
    }

    pub fn element(&self, coords: &[i64]) -> Result<GroupElement, AlgebraError> {
        if coords.len() != self.arity() {
            return Err(AlgebraError::Parse(format!(
                "grade {coords:?} has arity {} but the group {} has arity {}",
                coords.len(),
                self.name(),
                self.arity()
            )));
        }
        Ok(self.reduce(coords.to_vec()))
    }

    fn reduce(&self, mut coords: Vec<i64>) -> GroupElement {
        for (c, &m) in coords.iter_mut().zip(&self.moduli) {
            if m > 0 {
                *c = c.rem_euclid(m as i64);
            }
        }
        GroupElement(coords)
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.reduce(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    /// `n·g`
    pub fn times(&self, n: i64, g: &GroupElement) -> GroupElement {
        self.reduce(g.0.iter().map(|x| x * n).collect())
    }

    pub fn neg(&self, g: &GroupElement) -> GroupElement {
        self.times(-1, g)
    }
}

impl GroupElement {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0.as_slice() {
            [x] => write!(f, "{x}"),
            xs => {
                write!(f, "(")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
        }
    }
}
