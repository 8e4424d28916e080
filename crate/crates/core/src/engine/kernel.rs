use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::{Budget, GradedAlgebra};
use crate::freelie::{
    lyndon_basis, standard_factorization, GradedVar, GradingProfile, LieValues, Multidegree, AlgebraValues,
};
use crate::linalg::{Echelon, Vector};

use super::subst::{Range, Substitutions};
use super::verify::verify_poly;
use super::{cell_json, compare_spans, profile_for, CellSpan, EngineError, Relation};

/// Tuples evaluated per parallel task.
const CHUNK: u128 = 512;

/// Identities of `alg` inside one cell, as a subspace of the cell's
/// Lyndon coordinate space.
pub fn identity_kernel(
    alg: &GradedAlgebra,
    d: &Multidegree,
    cap: u32,
    budget: Budget,
) -> Result<CellSpan, EngineError> {
    let profile = profile_for(alg)?;
    check_families(&profile, d)?;
    let ctx = alg.ctx();
    let words = lyndon_basis(d, cap)?;
    let n = words.len();
    let vars: Vec<(GradedVar, Range)> = d
        .entries()
        .iter()
        .map(|&(v, e)| (v, if e == 1 { Range::Basis } else { Range::Full }))
        .collect();
    let subs = Substitutions::new(alg, &profile, &vars)?;
    if n == 0 || (0..vars.len()).any(|i| subs.component_dim(i) == 0) {
        // nothing to evaluate, or every word vanishes identically
        return Ok(CellSpan::new(d.clone(), words, Echelon::full(ctx, n)));
    }
    if subs.total > budget.cap {
        return Err(EngineError::BudgetExceeded {
            needed: subs.total,
            cap: budget.cap,
        });
    }

    let chunks = subs.total.div_ceil(CHUNK) as u64;
    let batch = (rayon::current_num_threads() as u64 * 4).max(1);
    let mut rows = Echelon::new(n);
    let mut start = 0;
    while start < chunks && rows.rank() < n {
        let end = (start + batch).min(chunks);
        let parts: Vec<Echelon> = (start..end)
            .into_par_iter()
            .map(|c| {
                let lo = c as u128 * CHUNK;
                let hi = (lo + CHUNK).min(subs.total);
                let mut e = Echelon::new(n);
                for t in lo..hi {
                    let values = subs.decode(ctx, alg.dim(), t);
                    let av = AlgebraValues::unchecked(alg, subs.vars.clone(), values);
                    let vals: Vec<Vector> = words.iter().map(|w| word_value(&av, w)).collect();
                    for k in 0..alg.dim() {
                        let row: Vector = vals.iter().map(|x| x[k]).collect();
                        e.insert(ctx, row);
                        if e.rank() == n {
                            return e;
                        }
                    }
                }
                e
            })
            .collect();
        for p in parts {
            rows.extend(ctx, &p);
        }
        start = end;
    }

    let kernel = rows.null_space(ctx);
    let span = CellSpan::new(d.clone(), words, kernel);
    for (i, p) in span.polys().iter().enumerate() {
        let r = verify_poly(&format!("kernel[{i}]"), p, alg, budget)?;
        if !r.holds {
            return Err(EngineError::Unsound(p.to_text(ctx)));
        }
    }
    Ok(span)
}

fn word_value(av: &AlgebraValues<'_>, w: &[GradedVar]) -> Vector {
    match standard_factorization(w) {
        None => av.var(w[0]).expect("every cell variable is assigned"),
        Some((u, v)) => av
            .bracket(&word_value(av, u), &word_value(av, v))
            .expect("brackets of vectors are total"),
    }
}

fn check_families(profile: &GradingProfile, d: &Multidegree) -> Result<(), EngineError> {
    for v in d.vars() {
        if !profile.has_family(v.family) {
            return Err(EngineError::ProfileMismatch(format!(
                "variable {v} is not in profile {}",
                profile.name()
            )));
        }
    }
    Ok(())
}

/// Every multilinear cell of total degree `1..=max_total`, one per way of
/// distributing the degree among the profile's families.
pub fn multilinear_cells(profile: &GradingProfile, max_total: u32) -> Vec<Multidegree> {
    let fams: Vec<char> = profile.families().iter().map(|&(c, _)| c).collect();
    let mut out = Vec::new();
    for total in 1..=max_total {
        let mut counts = vec![0u32; fams.len()];
        distribute(total, 0, &mut counts, &mut |counts| {
            let entries = fams.iter().zip(counts).flat_map(|(&f, &k)| {
                (1..=k).map(move |i| (GradedVar::new(f, i), 1))
            });
            out.push(Multidegree::new(entries));
        });
    }
    out
}

fn distribute(left: u32, i: usize, counts: &mut [u32], emit: &mut impl FnMut(&[u32])) {
    if i + 1 == counts.len() {
        counts[i] = left;
        emit(counts);
        return;
    }
    for k in (0..=left).rev() {
        counts[i] = k;
        distribute(left - k, i + 1, counts, emit);
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellVerdict {
    pub cell: Multidegree,
    pub ambient_dim: usize,
    pub dim_a: usize,
    pub dim_b: usize,
    pub relation: Relation,
}

impl CellVerdict {
    pub fn to_json(&self) -> Value {
        json!({
            "cell": cell_json(&self.cell),
            "ambient_dim": self.ambient_dim,
            "dim_a": self.dim_a,
            "dim_b": self.dim_b,
            "verdict": self.relation.as_str(),
        })
    }
}

pub fn compare_algebra_kernels(
    a: &GradedAlgebra,
    b: &GradedAlgebra,
    cells: &[Multidegree],
    cap: u32,
    budget: Budget,
) -> Result<Vec<CellVerdict>, EngineError> {
    if a.group() != b.group() {
        return Err(EngineError::ProfileMismatch(format!(
            "{} is graded by {} but {} by {}",
            a.name(),
            a.group().name(),
            b.name(),
            b.group().name()
        )));
    }
    if a.ctx().q() != b.ctx().q() || a.ctx().spec() != b.ctx().spec() {
        return Err(EngineError::ProfileMismatch("algebras are over different fields".into()));
    }
    cells
        .iter()
        .map(|d| {
            let ka = identity_kernel(a, d, cap, budget)?;
            let kb = identity_kernel(b, d, cap, budget)?;
            let cmp = compare_spans(a.ctx(), &ka, &kb)?;
            Ok(CellVerdict {
                cell: d.clone(),
                ambient_dim: ka.ambient_dim(),
                dim_a: cmp.dim_a,
                dim_b: cmp.dim_b,
                relation: cmp.relation,
            })
        })
        .collect()
}
