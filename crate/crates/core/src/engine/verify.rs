use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::{Budget, GradedAlgebra};
use crate::dsl::BasisFile;
use crate::freelie::{evaluate_poly, evaluate_with, AlgebraValues, Expr, GradedVar, LiePoly};
use crate::linalg::{self, Vector};

use super::subst::{Range, Substitutions};
use super::{profile_for, EngineError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub assignment: Vec<(GradedVar, Vector)>,
    pub value: Vector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub identity: String,
    pub algebra: String,
    pub holds: bool,
    /// All tuples when the identity holds; up to the first witness otherwise.
    pub substitutions_checked: u128,
    pub counterexample: Option<Counterexample>,
}

impl VerifyReport {
    pub fn to_json(&self, alg: &GradedAlgebra) -> Value {
        let counterexample = self.counterexample.as_ref().map(|c| {
            let assignment: serde_json::Map<String, Value> = c
                .assignment
                .iter()
                .map(|(v, x)| (v.to_string(), json!(alg.format_element(x))))
                .collect();
            json!({ "assignment": assignment, "value": alg.format_element(&c.value) })
        });
        json!({
            "op": "verify",
            "identity": self.identity,
            "algebra": self.algebra,
            "field": alg.ctx().spec(),
            "holds": self.holds,
            "substitutions_checked": self.substitutions_checked.to_string(),
            "counterexample": counterexample,
            "verdict": if self.holds { "holds" } else { "fails" },
        })
    }

    pub fn to_text(&self, alg: &GradedAlgebra) -> String {
        let mut s = format!(
            "{}: {} on {} ({} substitutions)",
            self.identity,
            if self.holds { "holds" } else { "FAILS" },
            self.algebra,
            self.substitutions_checked
        );
        if let Some(c) = &self.counterexample {
            let parts: Vec<String> = c
                .assignment
                .iter()
                .map(|(v, x)| format!("{v} = {}", alg.format_element(x)))
                .collect();
            s.push_str(&format!(
                "\n  witness: {}; value {}",
                parts.join(", "),
                alg.format_element(&c.value)
            ));
        }
        s
    }
}

/// Exhaustive check that `f` vanishes on every grade-respecting tuple.
pub fn verify_identity(
    name: &str,
    f: &Expr,
    alg: &GradedAlgebra,
    budget: Budget,
) -> Result<VerifyReport, EngineError> {
    let vars: Vec<GradedVar> = f.vars().into_iter().collect();
    run(name, alg, &vars, budget, |values| {
        evaluate_with(values, f).map_err(EngineError::from)
    })
}

/// The same check for an element of the free algebra in Lyndon coordinates.
pub fn verify_poly(
    name: &str,
    p: &LiePoly,
    alg: &GradedAlgebra,
    budget: Budget,
) -> Result<VerifyReport, EngineError> {
    let mut vars: Vec<GradedVar> = p.terms().flat_map(|(w, _)| w.iter().copied()).collect();
    vars.sort();
    vars.dedup();
    run(name, alg, &vars, budget, |values| {
        evaluate_poly(values, p).map_err(EngineError::from)
    })
}

pub fn verify_basis(
    basis: &BasisFile,
    alg: &GradedAlgebra,
    only: Option<&str>,
    budget: Budget,
) -> Result<Vec<VerifyReport>, EngineError> {
    let profile = profile_for(alg)?;
    if profile.name() != basis.profile.name() {
        return Err(EngineError::ProfileMismatch(format!(
            "basis uses profile {} but {} is graded by {}",
            basis.profile.name(),
            alg.name(),
            alg.group().name()
        )));
    }
    basis
        .identities
        .iter()
        .filter(|id| only.is_none_or(|n| n == id.name))
        .map(|id| verify_identity(&id.name, &id.expr, alg, budget))
        .collect()
}

fn run<F>(
    name: &str,
    alg: &GradedAlgebra,
    vars: &[GradedVar],
    budget: Budget,
    eval: F,
) -> Result<VerifyReport, EngineError>
where
    F: Fn(&AlgebraValues<'_>) -> Result<Vector, EngineError> + Sync,
{
    let profile = profile_for(alg)?;
    let ranges: Vec<(GradedVar, Range)> = vars.iter().map(|&v| (v, Range::Full)).collect();
    let subs = Substitutions::new(alg, &profile, &ranges)?;
    if subs.total > budget.cap {
        return Err(EngineError::BudgetExceeded {
            needed: subs.total,
            cap: budget.cap,
        });
    }
    let ctx = alg.ctx();
    let total = subs.total as u64;
    let hit = (0..total)
        .into_par_iter()
        .map(|t| -> Result<Option<(u64, Vec<Vector>, Vector)>, EngineError> {
            let values = subs.decode(ctx, alg.dim(), t as u128);
            let av = AlgebraValues::unchecked(alg, subs.vars.clone(), values.clone());
            let x = eval(&av)?;
            Ok((!linalg::is_zero_vec(&x)).then_some((t, values, x)))
        })
        .find_first(|r| !matches!(r, Ok(None)));
    let report = match hit {
        None => VerifyReport {
            identity: name.to_string(),
            algebra: alg.name().to_string(),
            holds: true,
            substitutions_checked: subs.total,
            counterexample: None,
        },
        Some(Err(e)) => return Err(e),
        Some(Ok(None)) => unreachable!("filtered by find_first"),
        Some(Ok(Some((t, values, value)))) => VerifyReport {
            identity: name.to_string(),
            algebra: alg.name().to_string(),
            holds: false,
            substitutions_checked: t as u128 + 1,
            counterexample: Some(Counterexample {
                assignment: subs.vars.iter().copied().zip(values).collect(),
                value,
            }),
        },
    };
    Ok(report)
}
