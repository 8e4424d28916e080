use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use crate::field::{FieldContext, FieldElement};

use super::eval::{evaluate_with, FreeValues};
use super::lyndon::{is_lyndon, standard_bracketing, standard_factorization};
use super::{Expr, FreeLieError, GradedVar, Multidegree};

pub type Word = Vec<GradedVar>;

/// Element of the free Lie algebra in Lyndon coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LiePoly {
    terms: BTreeMap<Word, FieldElement>,
}

impl LiePoly {
    pub fn zero() -> LiePoly {
        LiePoly::default()
    }

    /// The basis element of a Lyndon word.
    pub fn word(w: Word, c: FieldElement) -> LiePoly {
        debug_assert!(is_lyndon(&w));
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        LiePoly { terms }
    }

    pub fn letter(v: GradedVar, ctx: &FieldContext) -> LiePoly {
        LiePoly::word(vec![v], ctx.one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, FieldElement)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn coefficient(&self, w: &[GradedVar]) -> FieldElement {
        self.terms.get(w).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn add_term(&mut self, ctx: &FieldContext, w: &[GradedVar], c: FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(w) {
            Some(x) => {
                *x = ctx.add(*x, c);
                if x.is_zero() {
                    self.terms.remove(w);
                }
            }
            None => {
                self.terms.insert(w.to_vec(), c);
            }
        }
    }

    /// `self += c·other`
    pub fn add_scaled(&mut self, ctx: &FieldContext, c: FieldElement, other: &LiePoly) {
        if c.is_zero() {
            return;
        }
        for (w, x) in other.terms() {
            self.add_term(ctx, w, ctx.mul(c, x));
        }
    }

    pub fn scaled(&self, ctx: &FieldContext, c: FieldElement) -> LiePoly {
        let mut out = LiePoly::zero();
        out.add_scaled(ctx, c, self);
        out
    }

    /// Terms grouped by multidegree, cells and words in canonical order.
    pub fn cells(&self) -> BTreeMap<Multidegree, Vec<(Word, FieldElement)>> {
        let mut out: BTreeMap<Multidegree, Vec<(Word, FieldElement)>> = BTreeMap::new();
        for (w, c) in self.terms() {
            out.entry(Multidegree::of_word(w)).or_default().push((w.clone(), c));
        }
        out
    }

    /// Only the terms of cell `d`.
    pub fn component(&self, d: &Multidegree) -> LiePoly {
        LiePoly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| &Multidegree::of_word(w) == d)
                .map(|(w, &c)| (w.clone(), c))
                .collect(),
        }
    }

    /// Coordinates on an ordered list of Lyndon words.
    pub fn coordinates(&self, basis: &[Word]) -> Vec<FieldElement> {
        basis.iter().map(|w| self.coefficient(w)).collect()
    }

    pub fn from_coordinates(basis: &[Word], coords: &[FieldElement]) -> LiePoly {
        LiePoly {
            terms: basis
                .iter()
                .zip(coords)
                .filter(|(_, c)| !c.is_zero())
                .map(|(w, &c)| (w.clone(), c))
                .collect(),
        }
    }

    /// As a sum of standard bracketings with integer coefficients.
    ///
    /// Coefficients outside the prime field have no integer form; they
    /// are written with their canonical index instead.
    pub fn to_expr(&self, ctx: &FieldContext) -> Expr {
        let items = self
            .cells()
            .into_values()
            .flatten()
            .map(|(w, c)| {
                let c = ctx.signed(c).unwrap_or(c.index() as i64);
                Expr::scaled(c, standard_bracketing(&w))
            })
            .collect();
        Expr::sum(items)
    }

    /// Text form; over GF(p²) coefficients use the field's own notation.
    pub fn to_text(&self, ctx: &FieldContext) -> String {
        if ctx.degree() == 1 || self.terms.values().all(|&c| ctx.signed(c).is_some()) {
            return self.to_expr(ctx).to_string();
        }
        let parts: Vec<String> = self
            .cells()
            .into_values()
            .flatten()
            .map(|(w, c)| format!("({})*{}", ctx.format(c), standard_bracketing(&w)))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Bounds on the cells an evaluation may touch.
#[derive(Debug, Clone, Default)]
pub struct Limits {
    pub max_total: Option<u32>,
    pub bound: Option<Multidegree>,
}

impl Limits {
    pub fn cap(max_total: u32) -> Limits {
        Limits {
            max_total: Some(max_total),
            bound: None,
        }
    }

    pub fn admits(&self, d: &Multidegree) -> bool {
        self.max_total.is_none_or(|m| d.total() <= m) && self.bound.as_ref().is_none_or(|b| d.le(b))
    }

    /// Whether a word of length `len` fits under the total cap.
    fn admits_len(&self, len: usize) -> bool {
        self.max_total.is_none_or(|m| len as u32 <= m)
    }
}

type Rewrite = Arc<[(Word, i64)]>;

/// Rewrites brackets of Lyndon words into the Lyndon basis.
///
/// Results of `[P(u), P(v)]` are memoized with integer coefficients; the
/// cache only saves work and never changes a result.
#[derive(Debug, Default)]
pub struct Normalizer {
    memo: RwLock<HashMap<(Word, Word), Rewrite>>,
}

impl Normalizer {
    pub fn new() -> Normalizer {
        Normalizer::default()
    }

    /// A process-wide shared instance.
    pub fn global() -> &'static Normalizer {
        static GLOBAL: OnceLock<Normalizer> = OnceLock::new();
        GLOBAL.get_or_init(Normalizer::new)
    }

    pub fn cache_len(&self) -> usize {
        self.memo.read().expect("memo lock").len()
    }

    /// `[P(u), P(v)]` for Lyndon words `u`, `v`.
    pub fn bracket_words(&self, u: &[GradedVar], v: &[GradedVar]) -> Rewrite {
        if u == v {
            return Arc::from(Vec::new());
        }
        if u > v {
            let r = self.bracket_words(v, u);
            return r.iter().map(|(w, c)| (w.clone(), -c)).collect();
        }
        let key = (u.to_vec(), v.to_vec());
        if let Some(r) = self.memo.read().expect("memo lock").get(&key) {
            return r.clone();
        }
        let result = self.rewrite(u, v);
        self.memo
            .write()
            .expect("memo lock")
            .entry(key)
            .or_insert(result)
            .clone()
    }

    fn rewrite(&self, u: &[GradedVar], v: &[GradedVar]) -> Rewrite {
        // u < v here, so uv is Lyndon; its standard factorization is (u, v)
        // exactly when u is a letter or u's right factor is ≥ v
        let joined = || [u, v].concat();
        let Some((u1, u2)) = standard_factorization(u) else {
            return Arc::from(vec![(joined(), 1)]);
        };
        if u2 >= v {
            return Arc::from(vec![(joined(), 1)]);
        }
        // [[u1,u2],v] = [[u1,v],u2] + [u1,[u2,v]]
        let mut acc: BTreeMap<Word, i64> = BTreeMap::new();
        for (w, a) in self.bracket_words(u1, v).iter() {
            for (x, b) in self.bracket_words(w, u2).iter() {
                *acc.entry(x.clone()).or_insert(0) += a * b;
            }
        }
        for (w, a) in self.bracket_words(u2, v).iter() {
            for (x, b) in self.bracket_words(u1, w).iter() {
                *acc.entry(x.clone()).or_insert(0) += a * b;
            }
        }
        acc.into_iter().filter(|&(_, c)| c != 0).collect()
    }

    /// Bracket of two free-algebra elements; `None` when a cell outside
    /// `limits` would appear.
    pub fn bracket(
        &self,
        ctx: &FieldContext,
        a: &LiePoly,
        b: &LiePoly,
        limits: &Limits,
    ) -> Option<LiePoly> {
        let mut out = LiePoly::zero();
        for (u, cu) in a.terms() {
            for (v, cv) in b.terms() {
                if u == v {
                    continue;
                }
                if !limits.admits_len(u.len() + v.len()) {
                    return None;
                }
                if limits.bound.is_some() {
                    let d = Multidegree::of_word(u).add(&Multidegree::of_word(v));
                    if !limits.admits(&d) {
                        return None;
                    }
                }
                let c = ctx.mul(cu, cv);
                for (w, k) in self.bracket_words(u, v).iter() {
                    out.add_term(ctx, w, ctx.mul(c, ctx.from_i64(*k)));
                }
            }
        }
        Some(out)
    }

    /// Lyndon coordinates of an expression.
    pub fn normalize(&self, ctx: &FieldContext, expr: &Expr, cap: u32) -> Result<LiePoly, FreeLieError> {
        if let Some(d) = expr.min_total_degree() {
            if d > cap as u64 {
                return Err(FreeLieError::CapExceeded {
                    degree: d.min(u32::MAX as u64) as u32,
                    cap,
                });
            }
        }
        let values = FreeValues::identity(self, ctx, Limits::cap(cap));
        evaluate_with(&values, expr).map_err(|e| match e {
            FreeLieError::OutOfBounds => FreeLieError::CapExceeded {
                degree: expr.max_total_degree().unwrap_or(0).min(u32::MAX as u64) as u32,
                cap,
            },
            other => other,
        })
    }
}
