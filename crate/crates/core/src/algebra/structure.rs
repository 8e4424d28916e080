//! Center, derived and lower central series, and the ideal-lattice analyses
//! (nilradical, radical, monolith, A-algebra and Sheina checks).
//!
//! Ideal and subalgebra searches are exhaustive over echelon representatives
//! of subspaces, guarded by a [`Budget`].

use rayon::prelude::*;
use serde::Serialize;

use crate::field::FieldContext;
use crate::linalg::{self, Echelon, Vector};

use super::{AlgebraError, GradeGroup, GradedAlgebra, Subspace};

pub const DEFAULT_SUBSPACE_CAP: u128 = 10_000_000;

/// Upper bound on the number of subspaces an enumeration may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub cap: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            cap: DEFAULT_SUBSPACE_CAP,
        }
    }
}

impl Budget {
    pub fn new(cap: u128) -> Budget {
        Budget { cap }
    }

    /// The default cap, overridden by `GRADEDPI_BUDGET` when set.
    pub fn from_env() -> Budget {
        std::env::var("GRADEDPI_BUDGET")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .map(Budget::new)
            .unwrap_or_default()
    }
}

/// Whether only graded subspaces are considered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Graded,
    Ungraded,
}

/// Span of `[a, b]` over basis vectors of `a` and `b`.
pub fn bracket_span(alg: &GradedAlgebra, a: &Subspace, b: &Subspace) -> Subspace {
    let ctx = alg.ctx();
    let mut e = Echelon::new(alg.dim());
    for x in a.basis() {
        for y in b.basis() {
            e.insert(ctx, alg.bracket(x, y));
        }
    }
    Subspace::from_echelon(e)
}

pub fn center(alg: &GradedAlgebra) -> Subspace {
    let n = alg.dim();
    let ctx = alg.ctx();
    // x is central iff Σ_i x_i c[j][i][k] = 0 for all j, k
    let rows = (0..n).flat_map(|j| {
        (0..n).map(move |k| (0..n).map(|i| alg.structure_constant(j, i, k)).collect::<Vector>())
    });
    Subspace::from_echelon(Echelon::from_rows(ctx, n, rows).null_space(ctx))
}

/// `L, L^(1) = [L, L], L^(2), …` up to the first repeated term.
pub fn derived_series(alg: &GradedAlgebra) -> Vec<Subspace> {
    series(alg, Subspace::whole(alg), |alg, cur, _| bracket_span(alg, cur, cur))
}

/// `L^1 = L, L^2 = [L, L], L^3 = [L^2, L], …` up to the first repeated term.
pub fn lower_central(alg: &GradedAlgebra) -> Vec<Subspace> {
    series(alg, Subspace::whole(alg), |alg, cur, first| bracket_span(alg, cur, first))
}

fn series(
    alg: &GradedAlgebra,
    start: Subspace,
    step: impl Fn(&GradedAlgebra, &Subspace, &Subspace) -> Subspace,
) -> Vec<Subspace> {
    let mut out = vec![start.clone()];
    loop {
        let next = step(alg, out.last().expect("nonempty"), &start);
        if &next == out.last().expect("nonempty") {
            return out;
        }
        let done = next.is_zero();
        out.push(next);
        if done {
            return out;
        }
    }
}

pub fn is_subalgebra(alg: &GradedAlgebra, s: &Subspace) -> bool {
    let ctx = alg.ctx();
    let b = s.basis();
    (0..b.len()).all(|i| (i + 1..b.len()).all(|j| s.contains(ctx, &alg.bracket(&b[i], &b[j]))))
}

pub fn is_ideal(alg: &GradedAlgebra, s: &Subspace) -> bool {
    let ctx = alg.ctx();
    s.basis()
        .iter()
        .all(|x| (0..alg.dim()).all(|i| s.contains(ctx, &alg.bracket(&alg.basis(i), x))))
}

pub fn is_abelian(alg: &GradedAlgebra, s: &Subspace) -> bool {
    bracket_span(alg, s, s).is_zero()
}

/// Nilpotency of `s` as a Lie algebra in its own right (`s` a subalgebra).
pub fn is_nilpotent(alg: &GradedAlgebra, s: &Subspace) -> bool {
    let mut cur = s.clone();
    loop {
        if cur.is_zero() {
            return true;
        }
        let next = bracket_span(alg, &cur, s);
        if next == cur {
            return false;
        }
        cur = next;
    }
}

pub fn is_solvable(alg: &GradedAlgebra, s: &Subspace) -> bool {
    let mut cur = s.clone();
    loop {
        if cur.is_zero() {
            return true;
        }
        let next = bracket_span(alg, &cur, &cur);
        if next == cur {
            return false;
        }
        cur = next;
    }
}

/// `s` is the direct sum of its intersections with the grade components.
pub fn is_graded(alg: &GradedAlgebra, s: &Subspace) -> bool {
    let ctx = alg.ctx();
    let total: usize = alg
        .grade_support()
        .iter()
        .map(|g| {
            let comp = Subspace::span(ctx, alg.dim(), alg.component(g).into_iter().map(|i| alg.basis(i)));
            s.intersect(ctx, &comp).dim()
        })
        .sum();
    total == s.dim()
}

/// `[n choose k]_q`, the number of `k`-dimensional subspaces of `GF(q)^n`.
pub fn gaussian_binomial(n: usize, k: usize, q: u32) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num = num.saturating_mul(q.saturating_pow((n - i) as u32).saturating_sub(1));
        den = den.saturating_mul(q.saturating_pow((i + 1) as u32).saturating_sub(1));
    }
    if num == u128::MAX {
        return u128::MAX;
    }
    num / den
}

/// The echelon forms of one pivot pattern inside a block.
struct Cell {
    pivots: Vec<usize>,
    free: Vec<(usize, usize)>,
    count: u128,
}

/// Subspaces of the span of `basis`, indexed by an integer.
struct BlockEnum {
    basis: Vec<Vector>,
    cells: Vec<Cell>,
    offsets: Vec<u128>,
    total: u128,
}

impl BlockEnum {
    fn new(basis: Vec<Vector>, q: u32, max_dim: usize) -> BlockEnum {
        let m = basis.len();
        let mut cells = Vec::new();
        for k in 0..=m.min(max_dim) {
            for pivots in k_subsets(m, k) {
                let mut free = Vec::new();
                for (r, &p) in pivots.iter().enumerate() {
                    for c in p + 1..m {
                        if !pivots.contains(&c) {
                            free.push((r, c));
                        }
                    }
                }
                let count = (q as u128).saturating_pow(free.len() as u32);
                cells.push(Cell { pivots, free, count });
            }
        }
        let mut offsets = Vec::with_capacity(cells.len());
        let mut total: u128 = 0;
        for c in &cells {
            offsets.push(total);
            total = total.saturating_add(c.count);
        }
        BlockEnum {
            basis,
            cells,
            offsets,
            total,
        }
    }

    /// Ambient rows of the subspace with index `idx`.
    fn decode(&self, ctx: &FieldContext, mut idx: u128, out: &mut Vec<Vector>) {
        let ci = self.offsets.partition_point(|&o| o <= idx) - 1;
        idx -= self.offsets[ci];
        let cell = &self.cells[ci];
        let m = self.basis.len();
        let mut coords: Vec<Vector> = cell
            .pivots
            .iter()
            .map(|&p| linalg::unit(ctx, m, p))
            .collect();
        let q = ctx.q() as u128;
        for &(r, c) in &cell.free {
            coords[r][c] = ctx.element((idx % q) as usize);
            idx /= q;
        }
        let ambient = self.basis.first().map_or(0, |b| b.len());
        for row in coords {
            let mut v = linalg::zeros(ctx, ambient);
            for (x, b) in row.iter().zip(&self.basis) {
                linalg::add_scaled(ctx, &mut v, *x, b);
            }
            out.push(v);
        }
    }
}

fn k_subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            go(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// Homogeneous blocks of `within` (the whole algebra when `None`).
fn blocks(alg: &GradedAlgebra, mode: Mode, within: Option<&Subspace>) -> Vec<Vec<Vector>> {
    let ctx = alg.ctx();
    let whole = Subspace::whole(alg);
    let w = within.unwrap_or(&whole);
    match mode {
        Mode::Ungraded => vec![w.basis().to_vec()],
        Mode::Graded => alg
            .grade_support()
            .iter()
            .map(|g| {
                let comp =
                    Subspace::span(ctx, alg.dim(), alg.component(g).into_iter().map(|i| alg.basis(i)));
                w.intersect(ctx, &comp).basis().to_vec()
            })
            .filter(|b| !b.is_empty())
            .collect(),
    }
}

/// Every subspace (graded ones only in graded mode) of `within` with
/// dimension at most `max_dim` that satisfies `keep`, in canonical order.
pub fn enumerate_subspaces<F>(
    alg: &GradedAlgebra,
    mode: Mode,
    within: Option<&Subspace>,
    max_dim: Option<usize>,
    budget: Budget,
    keep: F,
) -> Result<Vec<Subspace>, AlgebraError>
where
    F: Fn(&Subspace) -> bool + Sync,
{
    let ctx = alg.ctx();
    let max_dim = max_dim.unwrap_or(alg.dim());
    let enums: Vec<BlockEnum> = blocks(alg, mode, within)
        .into_iter()
        .map(|b| BlockEnum::new(b, ctx.q(), max_dim))
        .collect();
    let needed = enums
        .iter()
        .fold(1u128, |acc, e| acc.saturating_mul(e.total));
    if needed > budget.cap {
        return Err(AlgebraError::BudgetExceeded {
            needed,
            cap: budget.cap,
        });
    }
    let n = alg.dim();
    let mut found: Vec<Subspace> = (0..needed as u64)
        .into_par_iter()
        .filter_map(|mut idx| {
            let mut rows = Vec::new();
            for e in &enums {
                let t = e.total as u64;
                e.decode(ctx, (idx % t) as u128, &mut rows);
                idx /= t;
            }
            if rows.len() > max_dim {
                return None;
            }
            let s = Subspace::span(ctx, n, rows);
            keep(&s).then_some(s)
        })
        .collect();
    found.sort_by(|a, b| a.canonical_cmp(b));
    Ok(found)
}

pub fn enumerate_ideals(
    alg: &GradedAlgebra,
    mode: Mode,
    max_dim: Option<usize>,
    budget: Budget,
) -> Result<Vec<Subspace>, AlgebraError> {
    enumerate_subspaces(alg, mode, None, max_dim, budget, |s| is_ideal(alg, s))
}

pub fn enumerate_subalgebras(
    alg: &GradedAlgebra,
    mode: Mode,
    max_dim: Option<usize>,
    budget: Budget,
) -> Result<Vec<Subspace>, AlgebraError> {
    enumerate_subspaces(alg, mode, None, max_dim, budget, |s| is_subalgebra(alg, s))
}

fn sum_all(alg: &GradedAlgebra, spaces: impl IntoIterator<Item = Subspace>) -> Subspace {
    spaces
        .into_iter()
        .fold(Subspace::zero(alg.dim()), |acc, s| acc.sum(alg.ctx(), &s))
}

/// The greatest nilpotent ideal (graded ideal in graded mode).
pub fn nilradical(alg: &GradedAlgebra, mode: Mode, budget: Budget) -> Result<Subspace, AlgebraError> {
    let ideals = enumerate_ideals(alg, mode, None, budget)?;
    Ok(sum_all(alg, ideals.into_iter().filter(|i| is_nilpotent(alg, i))))
}

/// The greatest solvable ideal (graded ideal in graded mode).
pub fn radical(alg: &GradedAlgebra, mode: Mode, budget: Budget) -> Result<Subspace, AlgebraError> {
    let ideals = enumerate_ideals(alg, mode, None, budget)?;
    Ok(sum_all(alg, ideals.into_iter().filter(|i| is_solvable(alg, i))))
}

fn minimal_ideals(ideals: &[Subspace], ctx: &FieldContext) -> Vec<Subspace> {
    let nonzero: Vec<&Subspace> = ideals.iter().filter(|s| !s.is_zero()).collect();
    nonzero
        .iter()
        .filter(|s| {
            !nonzero
                .iter()
                .any(|t| t.dim() < s.dim() && t.is_subspace_of(ctx, s))
        })
        .map(|s| (*s).clone())
        .collect()
}

/// The unique minimal nonzero ideal, if there is exactly one.
pub fn monolith(alg: &GradedAlgebra, mode: Mode, budget: Budget) -> Result<Subspace, AlgebraError> {
    let ideals = enumerate_ideals(alg, mode, None, budget)?;
    let mut minimal = minimal_ideals(&ideals, alg.ctx());
    if minimal.len() == 1 {
        Ok(minimal.pop().expect("one element"))
    } else {
        Err(AlgebraError::NotMonolithic { minimal })
    }
}

#[derive(Debug, Clone)]
pub struct AAlgebraReport {
    pub holds: bool,
    /// A nilpotent non-abelian subalgebra of least dimension, when one exists.
    pub witness: Option<Subspace>,
}

/// Whether every nilpotent subalgebra is abelian.
pub fn is_a_algebra(alg: &GradedAlgebra, mode: Mode, budget: Budget) -> Result<AAlgebraReport, AlgebraError> {
    let subs = enumerate_subalgebras(alg, mode, None, budget)?;
    let witness = subs
        .into_iter()
        .find(|s| !is_abelian(alg, s) && is_nilpotent(alg, s));
    Ok(AAlgebraReport {
        holds: witness.is_none(),
        witness,
    })
}

/// Ideals `I₁, I₂` strictly inside `[A, A]` with `I₁ + I₂ = [A, A]`, if any.
pub fn derived_splitting(
    alg: &GradedAlgebra,
    mode: Mode,
    budget: Budget,
) -> Result<Option<(Subspace, Subspace)>, AlgebraError> {
    let ctx = alg.ctx();
    let whole = Subspace::whole(alg);
    let derived = bracket_span(alg, &whole, &whole);
    let inside: Vec<Subspace> = enumerate_subspaces(alg, mode, Some(&derived), None, budget, |s| {
        s.dim() < derived.dim() && is_ideal(alg, s)
    })?;
    for (i, a) in inside.iter().enumerate() {
        for b in &inside[i..] {
            if a.sum(ctx, b) == derived {
                return Ok(Some((a.clone(), b.clone())));
            }
        }
    }
    Ok(None)
}

/// For a monolithic algebra: `[A, A]` is not a sum of two ideals properly
/// contained in it.
pub fn sheina_criterion(alg: &GradedAlgebra, mode: Mode, budget: Budget) -> Result<bool, AlgebraError> {
    monolith(alg, mode, budget)?;
    Ok(derived_splitting(alg, mode, budget)?.is_none())
}

#[derive(Debug, Clone, Serialize)]
pub struct PremetReport {
    pub derived_meets_center_trivially: bool,
    pub semisimple: bool,
    /// `None` when the algebra is not graded-semisimple.
    pub graded_simple_decomposition: Option<bool>,
    pub hypothesis: String,
}

fn hypothesis_path(alg: &GradedAlgebra) -> String {
    let g: &GradeGroup = alg.group();
    match g.moduli() {
        [] => "trivial group: ordinary semisimplicity".into(),
        [2] | [2, 2] => format!("{}: no root of unity required", g.name()),
        [3] => {
            if alg.ctx().has_cube_root() {
                "Z3: primitive cube root of unity present".into()
            } else {
                "Z3: primitive cube root of unity absent, decomposition not guaranteed".into()
            }
        }
        _ => format!("{}: finite grade support", g.name()),
    }
}

fn is_graded_simple(alg: &GradedAlgebra, ideal: &Subspace, budget: Budget) -> Result<bool, AlgebraError> {
    if is_abelian(alg, ideal) {
        return Ok(false);
    }
    let proper = enumerate_subspaces(alg, Mode::Graded, Some(ideal), None, budget, |j| {
        !j.is_zero()
            && j.dim() < ideal.dim()
            && j.basis()
                .iter()
                .all(|y| ideal.basis().iter().all(|x| j.contains(alg.ctx(), &alg.bracket(x, y))))
    })?;
    Ok(proper.is_empty())
}

/// `[A, A] ∩ Z(A) = 0`, semisimplicity, and the graded-simple decomposition.
pub fn premet_predicates(alg: &GradedAlgebra, budget: Budget) -> Result<PremetReport, AlgebraError> {
    let ctx = alg.ctx();
    let whole = Subspace::whole(alg);
    let derived = bracket_span(alg, &whole, &whole);
    let derived_meets_center_trivially = derived.intersect(ctx, &center(alg)).is_zero();
    let semisimple = radical(alg, Mode::Graded, budget)?.is_zero();
    let graded_simple_decomposition = if semisimple {
        let ideals = enumerate_ideals(alg, Mode::Graded, None, budget)?;
        let minimal = minimal_ideals(&ideals, ctx);
        let dims: usize = minimal.iter().map(Subspace::dim).sum();
        let total = sum_all(alg, minimal.iter().cloned());
        let mut ok = dims == alg.dim() && total.dim() == alg.dim();
        for m in &minimal {
            if !ok {
                break;
            }
            ok = is_graded_simple(alg, m, budget)?;
        }
        Some(ok)
    } else {
        None
    };
    Ok(PremetReport {
        derived_meets_center_trivially,
        semisimple,
        graded_simple_decomposition,
        hypothesis: hypothesis_path(alg),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{abelian, builtin, heisenberg};
    use crate::field::make_field;

    fn f(p: u32) -> FieldContext {
        make_field(p, 1).unwrap()
    }

    fn span(alg: &GradedAlgebra, labels: &[&str]) -> Subspace {
        let rows = labels.iter().map(|l| alg.parse_element(l).unwrap());
        Subspace::span(alg.ctx(), alg.dim(), rows)
    }

    #[test]
    fn gaussian_counts() {
        assert_eq!(gaussian_binomial(2, 1, 5), 6);
        assert_eq!(gaussian_binomial(3, 1, 5), 31);
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
        assert_eq!(gaussian_binomial(3, 0, 7), 1);
        assert_eq!(gaussian_binomial(2, 3, 7), 0);
    }

    #[test]
    fn enumeration_matches_gaussian_count() {
        for (n, p) in [(2, 5), (3, 7), (3, 5)] {
            let a = abelian(&f(p), n);
            let all = enumerate_subspaces(&a, Mode::Ungraded, None, None, Budget::default(), |_| true)
                .unwrap();
            let expected: u128 = (0..=n).map(|k| gaussian_binomial(n, k, p)).sum();
            assert_eq!(all.len() as u128, expected);
            let mut dedup = all.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), all.len());
        }
    }

    #[test]
    fn center_and_series() {
        let sl2 = builtin("sl2_z2", &f(5)).unwrap();
        assert!(center(&sl2).is_zero());
        let m1 = builtin("m1_z3", &f(7)).unwrap().ungraded();
        let ds = derived_series(&m1);
        assert_eq!(ds, vec![Subspace::whole(&m1), span(&m1, &["e12"]), Subspace::zero(2)]);
        let a1 = abelian(&f(5), 1);
        assert_eq!(lower_central(&a1), vec![Subspace::whole(&a1), Subspace::zero(1)]);
        let h = heisenberg(&f(5));
        assert_eq!(center(&h), span(&h, &["z"]));
        assert_eq!(lower_central(&h).len(), 3);
    }

    #[test]
    fn ideals_of_small_algebras() {
        let b = Budget::default();
        let sl2 = builtin("sl2_z2", &f(5)).unwrap();
        let ideals = enumerate_ideals(&sl2, Mode::Ungraded, None, b).unwrap();
        assert_eq!(ideals, vec![Subspace::zero(3), Subspace::whole(&sl2)]);

        let m1 = builtin("m1_z", &f(5)).unwrap().ungraded();
        let ideals = enumerate_ideals(&m1, Mode::Ungraded, None, b).unwrap();
        assert_eq!(ideals, vec![Subspace::zero(2), span(&m1, &["e12"]), Subspace::whole(&m1)]);

        let ab = abelian(&f(5), 2);
        assert_eq!(enumerate_ideals(&ab, Mode::Ungraded, None, b).unwrap().len(), 8);
    }

    #[test]
    fn budget_is_enforced() {
        let ab = abelian(&f(5), 3);
        let err = enumerate_ideals(&ab, Mode::Ungraded, None, Budget::new(10)).unwrap_err();
        assert!(matches!(err, AlgebraError::BudgetExceeded { needed: 64, cap: 10 }));
    }

    #[test]
    fn graded_mode_sees_only_graded_subspaces() {
        let sl2 = builtin("sl2_z2", &f(5)).unwrap();
        let all = enumerate_subspaces(&sl2, Mode::Graded, None, None, Budget::default(), |_| true)
            .unwrap();
        // {0, h} × subspaces of the 2-dim odd part (1 + 6 + 1)
        assert_eq!(all.len(), 16);
        assert!(all.iter().all(|s| is_graded(&sl2, s)));
    }

    #[test]
    fn nilradical_monolith_radical() {
        let b = Budget::default();
        let m1 = builtin("m1_z", &f(5)).unwrap();
        for mode in [Mode::Graded, Mode::Ungraded] {
            assert_eq!(nilradical(&m1, mode, b).unwrap(), span(&m1, &["e12"]));
            assert_eq!(radical(&m1, mode, b).unwrap(), Subspace::whole(&m1));
            assert_eq!(monolith(&m1, mode, b).unwrap(), span(&m1, &["e12"]));
        }
        let sl2 = builtin("sl2_z2", &f(5)).unwrap();
        assert_eq!(monolith(&sl2, Mode::Ungraded, b).unwrap(), Subspace::whole(&sl2));
        assert!(nilradical(&sl2, Mode::Ungraded, b).unwrap().is_zero());
        match monolith(&abelian(&f(5), 2), Mode::Ungraded, b) {
            Err(AlgebraError::NotMonolithic { minimal }) => assert_eq!(minimal.len(), 6),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn a_algebra_checks() {
        let b = Budget::default();
        let sl2 = builtin("sl2_z2", &f(5)).unwrap();
        assert!(is_a_algebra(&sl2, Mode::Ungraded, b).unwrap().holds);
        let h = heisenberg(&f(5));
        let r = is_a_algebra(&h, Mode::Ungraded, b).unwrap();
        assert!(!r.holds);
        assert_eq!(r.witness, Some(Subspace::whole(&h)));
        assert!(is_a_algebra(&abelian(&f(7), 3), Mode::Ungraded, b).unwrap().holds);
    }

    #[test]
    fn sheina_checks() {
        let b = Budget::default();
        let m1 = builtin("m1_z", &f(5)).unwrap();
        assert!(sheina_criterion(&m1, Mode::Ungraded, b).unwrap());
        let sl2 = builtin("sl2_z2", &f(5)).unwrap();
        assert!(sheina_criterion(&sl2, Mode::Ungraded, b).unwrap());
        let pair = m1.direct_product(&m1, "m1xm1").unwrap();
        assert!(matches!(
            sheina_criterion(&pair, Mode::Ungraded, b),
            Err(AlgebraError::NotMonolithic { .. })
        ));
        let (i1, i2) = derived_splitting(&pair, Mode::Ungraded, b).unwrap().unwrap();
        assert_eq!((i1.dim(), i2.dim()), (1, 1));
    }

    #[test]
    fn premet_reports() {
        let b = Budget::default();
        let sl2 = builtin("sl2_z2", &f(5)).unwrap();
        let r = premet_predicates(&sl2, b).unwrap();
        assert!(r.derived_meets_center_trivially && r.semisimple);
        assert_eq!(r.graded_simple_decomposition, Some(true));
        let m1 = builtin("m1_z", &f(5)).unwrap();
        let r = premet_predicates(&m1, b).unwrap();
        assert!(r.derived_meets_center_trivially);
        assert!(!r.semisimple);
        assert_eq!(r.graded_simple_decomposition, None);
        let a1 = abelian(&f(5), 1);
        assert!(premet_predicates(&a1, b).unwrap().derived_meets_center_trivially);
    }
}
