//! Lower bounds for the verbal ideal generated by a basis, cell by cell.
//!
//! An instance is `f(u₁,…,u_k)` with each `uᵢ` a combination of at most `s`
//! Lyndon monomials in the target cell's variables, followed by up to `r`
//! outer brackets with monomials.  Instances whose tree can leave the
//! componentwise bound `D = d + margin` or the total-degree cap are skipped,
//! so the result is always a subset of the true consequence space.
//!
//! The set of admitted instances is stable under rescaling each variable by
//! an element of GF(q)*, hence so is its span.  The span therefore splits
//! into the isotypic parts of that torus, indexed by multidegrees modulo
//! q − 1, and each instance may be replaced by its part in the class of `d`.
//! Outer brackets are linear and shift the class, so they are applied to
//! echelon bases stage by stage instead of to every instance.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::{Budget, GroupElement};
use crate::dsl::BasisFile;
use crate::field::{FieldContext, FieldElement};
use crate::freelie::{
    evaluate_with, lyndon_basis, Expr, FreeValues, GradedVar, LiePoly, Limits, Multidegree, Normalizer,
    DEFAULT_DEGREE_CAP,
};
use crate::linalg::{Echelon, Vector};

use super::{CellSpan, EngineError, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenLimits {
    /// Monomials per substituted variable.
    pub s: usize,
    /// Outer bracket factors.
    pub r: usize,
    /// Slack added to every exponent of the target cell; `None` means the
    /// largest generator degree.
    pub margin: Option<u32>,
    /// Total-degree cap for every cell touched.
    pub cap: u32,
}

impl Default for GenLimits {
    fn default() -> Self {
        GenLimits {
            s: 2,
            r: 2,
            margin: None,
            cap: DEFAULT_DEGREE_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsequenceReport {
    pub span: CellSpan,
    /// Instances evaluated.
    pub instances: u128,
    /// Instances skipped because they could leave the bounds.
    pub skipped: u128,
    /// Generators dropped because every instance exceeds the cap.
    pub dropped: Vec<String>,
    pub warning: Option<String>,
}

impl ConsequenceReport {
    pub fn to_json(&self, ctx: &FieldContext) -> Value {
        let mut v = self.span.to_json(ctx);
        let m = v.as_object_mut().expect("object");
        m.insert("op".into(), json!("consequences"));
        m.insert("instances".into(), json!(self.instances.to_string()));
        m.insert("skipped".into(), json!(self.skipped.to_string()));
        m.insert("dropped".into(), json!(self.dropped));
        m.insert("warning".into(), json!(self.warning));
        m.insert("verdict".into(), json!("lower bound"));
        v
    }
}

/// Multidegree restricted to the target variables, exponents mod `q − 1`.
type Class = Vec<u32>;

struct Ctx<'a> {
    field: &'a FieldContext,
    norm: &'a Normalizer,
    vars: Vec<GradedVar>,
    target: Multidegree,
    bound: Multidegree,
    cap: u32,
    modulus: u32,
    /// Every admissible cell with its Lyndon words.
    cells: Vec<(Multidegree, Vec<Word>)>,
}

/// Columns of one class: every admissible word whose cell is in the class,
/// with the target cell last.
struct ClassSpace {
    words: Vec<Word>,
    index: HashMap<Word, usize>,
}

impl Ctx<'_> {
    fn class_of(&self, d: &Multidegree) -> Class {
        self.vars.iter().map(|&v| d.exponent(v) % self.modulus).collect()
    }

    fn shift(&self, c: &Class, by: &Multidegree, sign: i64) -> Class {
        let m = self.modulus as i64;
        c.iter()
            .zip(&self.vars)
            .map(|(&x, &v)| (x as i64 + sign * by.exponent(v) as i64).rem_euclid(m) as u32)
            .collect()
    }

    fn limits(&self) -> Limits {
        Limits {
            max_total: Some(self.cap),
            bound: Some(self.bound.clone()),
        }
    }

    fn space(&self, class: &Class) -> ClassSpace {
        let mut words = Vec::new();
        let mut last = Vec::new();
        for (c, ws) in &self.cells {
            if &self.class_of(c) != class {
                continue;
            }
            if c == &self.target {
                last.extend(ws.iter().cloned());
            } else {
                words.extend(ws.iter().cloned());
            }
        }
        words.extend(last);
        let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        ClassSpace { words, index }
    }

    /// The nonzero class parts of `p` among the tracked classes.
    fn split(&self, spaces: &BTreeMap<Class, ClassSpace>, p: &LiePoly) -> BTreeMap<Class, Vector> {
        let mut out: BTreeMap<Class, Vector> = BTreeMap::new();
        for (w, c) in p.terms() {
            let class = self.class_of(&Multidegree::of_word(w));
            let Some(sp) = spaces.get(&class) else {
                continue;
            };
            if let Some(&i) = sp.index.get(w) {
                out.entry(class).or_insert_with(|| vec![self.field.zero(); sp.words.len()])[i] = c;
            }
        }
        out
    }

    fn project(&self, space: &ClassSpace, p: &LiePoly) -> Vector {
        let mut v = vec![self.field.zero(); space.words.len()];
        for (w, c) in p.terms() {
            if let Some(&i) = space.index.get(w) {
                v[i] = c;
            }
        }
        v
    }
}

/// Monomial choices for one variable: `Σ cᵢ mᵢ` over at most `s` distinct
/// monomials with nonzero coefficients.
struct Choice {
    poly: LiePoly,
    /// Per-target-variable maximal exponent, then the maximal total degree.
    reach: Vec<u32>,
}

fn choices(ctx: &Ctx<'_>, monos: &[(Multidegree, Word)], s: usize) -> Vec<Choice> {
    let field = ctx.field;
    let units: Vec<FieldElement> = field.elements().filter(|c| !c.is_zero()).collect();
    let mut out = Vec::new();
    let mut pick = Vec::new();
    subsets(monos.len(), s, 0, &mut pick, &mut |idx: &[usize]| {
        let mut coef = vec![0usize; idx.len()];
        loop {
            let mut poly = LiePoly::zero();
            let mut reach = vec![0u32; ctx.vars.len() + 1];
            for (k, &i) in idx.iter().enumerate() {
                let (d, w) = &monos[i];
                poly.add_term(field, w, units[coef[k]]);
                for (j, &v) in ctx.vars.iter().enumerate() {
                    reach[j] = reach[j].max(d.exponent(v));
                }
                let n = ctx.vars.len();
                reach[n] = reach[n].max(d.total());
            }
            out.push(Choice { poly, reach });
            // next coefficient vector
            let mut k = 0;
            while k < coef.len() {
                coef[k] += 1;
                if coef[k] < units.len() {
                    break;
                }
                coef[k] = 0;
                k += 1;
            }
            if k == coef.len() {
                break;
            }
        }
    });
    out
}

fn subsets(n: usize, s: usize, from: usize, pick: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    if !pick.is_empty() {
        emit(pick);
    }
    if pick.len() == s {
        return;
    }
    for i in from..n {
        pick.push(i);
        subsets(n, s, i + 1, pick, emit);
        pick.pop();
    }
}

/// Upper bounds on the exponents of an instance, from those of its leaves.
/// `None` when the tree is identically zero by construction.
fn reach(e: &Expr, leaf: &impl Fn(GradedVar) -> Vec<u32>) -> Option<Vec<u32>> {
    match e {
        Expr::Var(v) => Some(leaf(*v)),
        Expr::Scaled(c, x) => {
            if *c == 0 {
                None
            } else {
                reach(x, leaf)
            }
        }
        Expr::Sum(items) => items.iter().filter_map(|x| reach(x, leaf)).reduce(|a, b| {
            a.iter().zip(&b).map(|(x, y)| *x.max(y)).collect()
        }),
        Expr::Bracket(a, b) => {
            let (a, b) = (reach(a, leaf)?, reach(b, leaf)?);
            Some(a.iter().zip(&b).map(|(x, y)| x.saturating_add(*y)).collect())
        }
        Expr::AdPow { base, op, exp } => {
            let (a, b) = (reach(base, leaf)?, reach(op, leaf)?);
            let k = u32::try_from(*exp).unwrap_or(u32::MAX);
            Some(
                a.iter()
                    .zip(&b)
                    .map(|(x, y)| x.saturating_add(y.saturating_mul(k)))
                    .collect(),
            )
        }
    }
}

/// A verified lower bound for the consequences of `basis` in cell `d`.
pub fn consequence_span(
    basis: &BasisFile,
    d: &Multidegree,
    limits: GenLimits,
    field: &FieldContext,
    budget: Budget,
) -> Result<ConsequenceReport, EngineError> {
    let profile = &basis.profile;
    for v in d.vars() {
        profile.grade_of(v).map_err(|_| {
            EngineError::ProfileMismatch(format!("variable {v} is not in profile {}", profile.name()))
        })?;
    }
    let target_words = lyndon_basis(d, limits.cap)?;
    let q = field.q();
    let warning = d
        .entries()
        .iter()
        .any(|&(_, e)| e >= q)
        .then(|| format!("cell {d} has an exponent of at least q = {q}; the span may be small"));

    let margin = limits.margin.unwrap_or_else(|| {
        basis
            .identities
            .iter()
            .filter_map(|i| i.expr.max_total_degree())
            .max()
            .unwrap_or(0)
            .min(u32::MAX as u64) as u32
    });
    let bound = d.widen(margin);
    let vars: Vec<GradedVar> = d.vars().collect();

    // every cell c ≤ bound, 1 ≤ |c| ≤ cap, with its Lyndon words
    let mut cells = Vec::new();
    let mut exps = vec![0u32; vars.len()];
    loop {
        let c = Multidegree::new(vars.iter().copied().zip(exps.iter().copied()));
        if !c.is_empty() && c.total() <= limits.cap {
            let ws = lyndon_basis(&c, limits.cap)?;
            if !ws.is_empty() {
                cells.push((c, ws));
            }
        }
        let mut k = 0;
        while k < exps.len() {
            exps[k] += 1;
            let fits = exps[k] <= bound.exponent(vars[k]) && exps.iter().sum::<u32>() <= limits.cap;
            if fits {
                break;
            }
            exps[k] = 0;
            k += 1;
        }
        if k == exps.len() {
            break;
        }
    }
    cells.sort();

    let norm = Normalizer::global();
    let ctx = Ctx {
        field,
        norm,
        vars: vars.clone(),
        target: d.clone(),
        bound,
        cap: limits.cap,
        modulus: q - 1,
        cells,
    };

    // monomials ≤ d, by grade
    let mut by_grade: BTreeMap<GroupElement, Vec<(Multidegree, Word)>> = BTreeMap::new();
    for (c, ws) in &ctx.cells {
        if !c.le(d) {
            continue;
        }
        let g = c.grade(profile)?;
        for w in ws {
            by_grade.entry(g.clone()).or_default().push((c.clone(), w.clone()));
        }
    }
    let outer: Vec<(Multidegree, LiePoly)> = ctx
        .cells
        .iter()
        .filter(|(c, _)| c.le(d))
        .flat_map(|(c, ws)| ws.iter().map(move |w| (c.clone(), LiePoly::word(w.clone(), field.one()))))
        .collect();

    // classes reachable from d by subtracting at most r outer degrees
    let mut levels: Vec<Vec<Class>> = vec![vec![ctx.class_of(d)]];
    for _ in 0..limits.r {
        let prev = levels.last().expect("nonempty");
        let mut next: Vec<Class> = prev.clone();
        for c in prev {
            for (m, _) in &outer {
                next.push(ctx.shift(c, m, -1));
            }
        }
        next.sort();
        next.dedup();
        levels.push(next);
    }
    let all_classes = levels.last().expect("nonempty").clone();
    let spaces: BTreeMap<Class, ClassSpace> = all_classes.iter().map(|c| (c.clone(), ctx.space(c))).collect();

    // stage 0: class parts of every admitted instance
    let mut stage: BTreeMap<Class, Echelon> = spaces
        .iter()
        .map(|(c, sp)| (c.clone(), Echelon::new(sp.words.len())))
        .collect();
    let mut instances: u128 = 0;
    let mut skipped: u128 = 0;
    let mut dropped = Vec::new();
    for ident in &basis.identities {
        let f = &ident.expr;
        if f.max_total_degree().is_none() {
            continue;
        }
        // every substituted variable has degree ≥ 1, so no instance fits
        if f.max_total_degree().unwrap_or(0) > limits.cap as u64 {
            dropped.push(ident.name.clone());
            continue;
        }
        let fvars: Vec<GradedVar> = f.vars().into_iter().collect();
        let mut per_var = Vec::new();
        for &v in &fvars {
            let g = profile.grade_of(v)?;
            let monos = by_grade.get(&g).map(Vec::as_slice).unwrap_or(&[]);
            per_var.push(choices(&ctx, monos, limits.s));
        }
        if per_var.iter().any(Vec::is_empty) {
            continue;
        }
        let total: u128 = per_var.iter().map(|c| c.len() as u128).product();
        if instances + skipped + total > budget.cap {
            return Err(EngineError::BudgetExceeded {
                needed: instances + skipped + total,
                cap: budget.cap,
            });
        }
        let sizes: Vec<u128> = per_var.iter().map(|c| c.len() as u128).collect();
        const CHUNK: u128 = 256;
        let chunks = total.div_ceil(CHUNK) as u64;
        let parts: Vec<(BTreeMap<Class, Echelon>, u128, u128)> = (0..chunks)
            .into_par_iter()
            .map(|k| {
                let mut local: BTreeMap<Class, Echelon> = BTreeMap::new();
                let (mut used, mut skip) = (0u128, 0u128);
                let lo = k as u128 * CHUNK;
                let hi = (lo + CHUNK).min(total);
                for t in lo..hi {
                    let mut rest = t;
                    let mut pick = vec![0usize; sizes.len()];
                    for i in (0..sizes.len()).rev() {
                        pick[i] = (rest % sizes[i]) as usize;
                        rest /= sizes[i];
                    }
                    let chosen: Vec<&Choice> = pick.iter().enumerate().map(|(i, &j)| &per_var[i][j]).collect();
                    let leaf = |v: GradedVar| {
                        let i = fvars.binary_search(&v).expect("variable of f");
                        chosen[i].reach.clone()
                    };
                    let Some(r) = reach(f, &leaf) else {
                        continue;
                    };
                    let n = ctx.vars.len();
                    let fits = r[n] <= ctx.cap
                        && ctx.vars.iter().enumerate().all(|(j, &v)| r[j] <= ctx.bound.exponent(v));
                    if !fits {
                        skip += 1;
                        continue;
                    }
                    let assignment: BTreeMap<GradedVar, LiePoly> = fvars
                        .iter()
                        .copied()
                        .zip(chosen.iter().map(|c| c.poly.clone()))
                        .collect();
                    let values = FreeValues::substituting(ctx.norm, ctx.field, ctx.limits(), assignment);
                    let Ok(p) = evaluate_with(&values, f) else {
                        skip += 1;
                        continue;
                    };
                    used += 1;
                    if p.is_zero() {
                        continue;
                    }
                    for (class, v) in ctx.split(&spaces, &p) {
                        let n = v.len();
                        local.entry(class).or_insert_with(|| Echelon::new(n)).insert(ctx.field, v);
                    }
                }
                (local, used, skip)
            })
            .collect();
        for (local, used, skip) in parts {
            instances += used;
            skipped += skip;
            for (c, e) in local {
                stage.get_mut(&c).expect("known class").extend(field, &e);
            }
        }
    }

    // stages 1..=r: R_e ← R_e + Σ_m [R_{e−μ(m)}, m]
    for level in (0..limits.r).rev() {
        let wanted = &levels[level];
        let mut next: BTreeMap<Class, Echelon> = BTreeMap::new();
        for e in wanted {
            let sp = &spaces[e];
            let mut acc = stage[e].clone();
            for (mdeg, m) in &outer {
                let from = ctx.shift(e, mdeg, -1);
                let Some(src) = stage.get(&from) else {
                    continue;
                };
                let src_words = &spaces[&from].words;
                for row in src.rows() {
                    let p = LiePoly::from_coordinates(src_words, row);
                    if let Some(b) = ctx.norm.bracket(field, &p, m, &ctx.limits()) {
                        if !b.is_zero() {
                            acc.insert(field, ctx.project(sp, &b));
                        }
                    }
                }
            }
            next.insert(e.clone(), acc);
        }
        stage = next;
    }

    // intersect with the target cell: its columns come last
    let top = &stage[&ctx.class_of(d)];
    let offset = spaces[&ctx.class_of(d)].words.len() - target_words.len();
    let rows = top
        .rows()
        .iter()
        .zip(top.pivots())
        .filter(|&(_, &p)| p >= offset)
        .map(|(r, _)| r[offset..].to_vec());
    let basis_rows = Echelon::from_rows(field, target_words.len(), rows);
    Ok(ConsequenceReport {
        span: CellSpan::new(d.clone(), target_words, basis_rows),
        instances,
        skipped,
        dropped,
        warning,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::{parse_basis, shipped_basis};
    use crate::field::make_field;

    fn cell(s: &str) -> Multidegree {
        s.parse().unwrap()
    }

    fn run(text: &str, d: &str, limits: GenLimits) -> ConsequenceReport {
        let f = make_field(5, 1).unwrap();
        let b = parse_basis(text, 5).unwrap();
        consequence_span(&b, &cell(d), limits, &f, Budget::default()).unwrap()
    }

    #[test]
    fn generator_spans_its_own_cell() {
        let r = run("profile Z2\nident yy: [y1, y2]\n", "y1,y2", GenLimits::default());
        assert_eq!(r.span.dim(), 1);
    }

    #[test]
    fn high_degree_generator_misses_low_cell() {
        let r = run("profile Z2\nident f: [z1, y1^q] = [z1, y1]\n", "z1,y1", GenLimits::default());
        assert_eq!(r.span.dim(), 0);
        assert!(r.instances > 0);
    }

    #[test]
    fn outer_brackets_reach_larger_cells() {
        let text = "profile Z2\nident yy: [y1, y2]\n";
        let r = run(text, "y1,y2,z1", GenLimits::default());
        assert_eq!(r.span.dim(), 1);
        let r = run(text, "y1,y2,z1", GenLimits { r: 0, ..GenLimits::default() });
        assert_eq!(r.span.dim(), 0);
    }

    #[test]
    fn long_generators_are_dropped() {
        let r = run(shipped_basis("beta_z2.lie").unwrap(), "y1,y2", GenLimits::default());
        assert_eq!(r.dropped, ["sem1", "sem2"]);
        assert_eq!(r.span.dim(), 1);
    }

    #[test]
    fn limits_are_monotone() {
        let text = shipped_basis("beta_z2.lie").unwrap();
        let mut last = 0;
        for (s, r) in [(1, 0), (1, 1), (2, 1), (2, 2)] {
            let rep = run(text, "z1,z2,y1", GenLimits { s, r, ..GenLimits::default() });
            assert!(rep.span.dim() >= last);
            last = rep.span.dim();
        }
        assert_eq!(last, 1);
    }
}
