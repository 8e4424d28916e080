//! The free graded Lie algebra on grade-typed variables: Lyndon bases per
//! multidegree, normalization of bracket expressions, and evaluation.

mod eval;
mod expr;
mod lyndon;
mod normalize;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::{GradeGroup, GroupElement};

pub use eval::{
    evaluate, evaluate_normal_form, evaluate_poly, evaluate_with, AlgebraValues, FreeValues,
    LieValues,
};
pub use expr::Expr;
pub use lyndon::{is_lyndon, lyndon_basis, standard_bracketing, standard_factorization, witt_dimension};
pub use normalize::{LiePoly, Limits, Normalizer, Word};

/// Default cap on the total degree of a Lyndon cell.
pub const DEFAULT_DEGREE_CAP: u32 = 8;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FreeLieError {
    #[error("total degree {degree} exceeds the cap of {cap}")]
    CapExceeded { degree: u32, cap: u32 },
    #[error("value for {var} is not in the grade-{expected} component")]
    GradeMismatch { var: String, expected: String },
    #[error("no value assigned to {0}")]
    Unassigned(String),
    #[error("variable family `{0}` is not in the grading profile")]
    UnknownFamily(char),
    #[error("evaluation left the permitted cells")]
    OutOfBounds,
    #[error("bad variable or cell `{0}`")]
    BadSpec(String),
}

/// A variable such as `y1`: a family letter plus a positive index.
///
/// The derived order (family, then index) is the global letter order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GradedVar {
    pub family: char,
    pub index: u32,
}

impl GradedVar {
    pub fn new(family: char, index: u32) -> GradedVar {
        GradedVar { family, index }
    }
}

impl fmt::Display for GradedVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.index)
    }
}

impl FromStr for GradedVar {
    type Err = FreeLieError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FreeLieError::BadSpec(s.to_string());
        let mut chars = s.chars();
        let family = chars.next().filter(|c| c.is_ascii_lowercase()).ok_or_else(bad)?;
        let index: u32 = chars.as_str().parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        Ok(GradedVar { family, index })
    }
}

/// Exponent of each variable in a multihomogeneous cell, sorted by variable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Multidegree(Vec<(GradedVar, u32)>);

impl Multidegree {
    pub fn new(entries: impl IntoIterator<Item = (GradedVar, u32)>) -> Multidegree {
        let mut m: BTreeMap<GradedVar, u32> = BTreeMap::new();
        for (v, e) in entries {
            *m.entry(v).or_default() += e;
        }
        Multidegree(m.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    /// Letter content of a word.
    pub fn of_word(word: &[GradedVar]) -> Multidegree {
        Multidegree::new(word.iter().map(|&v| (v, 1)))
    }

    pub fn entries(&self) -> &[(GradedVar, u32)] {
        &self.0
    }

    pub fn vars(&self) -> impl Iterator<Item = GradedVar> + '_ {
        self.0.iter().map(|&(v, _)| v)
    }

    pub fn exponent(&self, v: GradedVar) -> u32 {
        self.0
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn total(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &Multidegree) -> Multidegree {
        Multidegree::new(self.0.iter().chain(&other.0).copied())
    }

    /// Every variable's exponent is at most the one in `other`.
    pub fn le(&self, other: &Multidegree) -> bool {
        self.0.iter().all(|&(v, e)| e <= other.exponent(v))
    }

    /// Add `margin` to every exponent.
    pub fn widen(&self, margin: u32) -> Multidegree {
        Multidegree(self.0.iter().map(|&(v, e)| (v, e + margin)).collect())
    }

    /// Exponents reduced modulo `m` (for `m > 0`), zero entries dropped.
    pub fn reduce_mod(&self, m: u32) -> Multidegree {
        Multidegree::new(self.0.iter().map(|&(v, e)| (v, e % m)))
    }

    pub fn grade(&self, profile: &GradingProfile) -> Result<GroupElement, FreeLieError> {
        let g = profile.group();
        let mut acc = g.zero();
        for &(v, e) in &self.0 {
            acc = g.add(&acc, &g.times(e as i64, &profile.grade_of(v)?));
        }
        Ok(acc)
    }

    pub fn is_multilinear(&self) -> bool {
        self.0.iter().all(|&(_, e)| e == 1)
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(v, e)| format!("{v}:{e}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Multidegree {
    type Err = FreeLieError;

    /// `y1:1,y2:1`; a bare `y1` means exponent 1.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut entries = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (v, e) = match part.split_once(':') {
                Some((v, e)) => (
                    v.trim(),
                    e.trim()
                        .parse::<u32>()
                        .map_err(|_| FreeLieError::BadSpec(s.to_string()))?,
                ),
                None => (part, 1),
            };
            if e == 0 {
                return Err(FreeLieError::BadSpec(s.to_string()));
            }
            entries.push((v.parse()?, e));
        }
        if entries.is_empty() {
            return Err(FreeLieError::BadSpec(s.to_string()));
        }
        Ok(Multidegree::new(entries))
    }
}

/// Which grade each variable family carries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingProfile {
    name: String,
    group: GradeGroup,
    families: Vec<(char, GroupElement)>,
}

impl GradingProfile {
    pub const NAMES: [&'static str; 4] = ["Z2", "Z3", "Z2Z2", "Z"];

    pub fn new(name: impl Into<String>, group: GradeGroup, families: Vec<(char, GroupElement)>) -> Self {
        GradingProfile {
            name: name.into(),
            group,
            families,
        }
    }

    pub fn by_name(name: &str) -> Option<GradingProfile> {
        let fam = |g: &GradeGroup, list: &[(char, &[i64])]| -> Vec<(char, GroupElement)> {
            list.iter()
                .map(|&(c, x)| (c, g.element(x).expect("valid profile grade")))
                .collect()
        };
        let (group, families) = match name {
            "Z2" => {
                let g = GradeGroup::z2();
                let f = fam(&g, &[('y', &[0]), ('z', &[1])]);
                (g, f)
            }
            "Z3" => {
                let g = GradeGroup::z3();
                let f = fam(&g, &[('x', &[-1]), ('y', &[0]), ('z', &[1])]);
                (g, f)
            }
            "Z2Z2" => {
                let g = GradeGroup::z2z2();
                let f = fam(
                    &g,
                    &[('w', &[0, 0]), ('x', &[0, 1]), ('y', &[1, 0]), ('z', &[1, 1])],
                );
                (g, f)
            }
            "Z" => {
                let g = GradeGroup::integers();
                let f = fam(&g, &[('x', &[-1]), ('y', &[0]), ('z', &[1])]);
                (g, f)
            }
            _ => return None,
        };
        Some(GradingProfile::new(name, group, families))
    }

    /// The built-in profile whose group is `group`, if any.
    pub fn for_group(group: &GradeGroup) -> Option<GradingProfile> {
        Self::NAMES
            .iter()
            .filter_map(|n| Self::by_name(n))
            .find(|p| &p.group == group)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn group(&self) -> &GradeGroup {
        &self.group
    }

    pub fn families(&self) -> &[(char, GroupElement)] {
        &self.families
    }

    pub fn has_family(&self, c: char) -> bool {
        self.families.iter().any(|&(f, _)| f == c)
    }

    pub fn grade_of(&self, v: GradedVar) -> Result<GroupElement, FreeLieError> {
        self.families
            .iter()
            .find(|&&(f, _)| f == v.family)
            .map(|(_, g)| g.clone())
            .ok_or(FreeLieError::UnknownFamily(v.family))
    }
}
