use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use gradedpi::algebra::builtin;
use gradedpi::field::make_field;
use gradedpi::freelie::{evaluate, evaluate_poly, AlgebraValues, Expr, GradedVar, GradingProfile, Normalizer};

use crate::commands::{Outcome, Output};

const ASSIGNMENTS: usize = 20;

fn tree(rng: &mut ChaCha8Rng, vars: &[GradedVar], depth: u32) -> Expr {
    if depth == 0 || rng.gen_bool(0.3) {
        return Expr::Var(vars[rng.gen_range(0..vars.len())]);
    }
    match rng.gen_range(0..4) {
        0 => Expr::scaled(rng.gen_range(-3..=3), tree(rng, vars, depth - 1)),
        1 => Expr::Sum(vec![tree(rng, vars, depth - 1), tree(rng, vars, depth - 1)]),
        2 => Expr::ad_pow(
            tree(rng, vars, depth - 1),
            Expr::Var(vars[rng.gen_range(0..vars.len())]),
            rng.gen_range(1..=3),
        ),
        _ => Expr::bracket(tree(rng, vars, depth - 1), tree(rng, vars, depth - 1)),
    }
}

/// Normal forms of random trees evaluated on sl2 with the Z2 grading,
/// against direct evaluation of the trees.
pub fn run(out: Output, seed: u64, samples: usize) -> Outcome {
    let f = make_field(5, 1).map_err(|e| e.to_string())?;
    let alg = builtin("sl2_z2", &f).map_err(|e| e.to_string())?;
    let profile = GradingProfile::by_name("Z2").expect("shipped profile");
    let vars: Vec<GradedVar> = ["y1", "y2", "z1"].iter().map(|s| s.parse().expect("var")).collect();
    let norm = Normalizer::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    let mut first_bad = None;
    let mut trees = 0;
    while trees < samples {
        let t = tree(&mut rng, &vars, 5);
        if t.max_total_degree().unwrap_or(0) > 8 {
            continue;
        }
        trees += 1;
        let nf = norm.normalize(&f, &t, 8).map_err(|e| e.to_string())?;
        for _ in 0..ASSIGNMENTS {
            let mut asg = BTreeMap::new();
            for &v in &vars {
                let mut x = alg.zero_vector();
                for i in alg.component(&profile.grade_of(v).expect("profile var")) {
                    x[i] = f.element(rng.gen_range(0..5));
                }
                asg.insert(v, x);
            }
            let direct = evaluate(&t, &alg, &profile, &asg).map_err(|e| e.to_string())?;
            let values = AlgebraValues::new(&alg, &profile, &asg).map_err(|e| e.to_string())?;
            let via = evaluate_poly(&values, &nf).map_err(|e| e.to_string())?;
            checked += 1;
            if direct != via && first_bad.is_none() {
                first_bad = Some(t.to_string());
            }
        }
    }
    let agree = first_bad.is_none();
    out.emit(
        json!({
            "op": "selftest",
            "seed": seed,
            "trees": trees,
            "evaluations": checked,
            "mismatch": first_bad,
            "verdict": if agree { "agree" } else { "disagree" },
        }),
        || match &first_bad {
            None => format!("{trees} trees x {ASSIGNMENTS} assignments: normal forms agree (seed {seed})"),
            Some(t) => format!("normal form disagrees with direct evaluation on {t} (seed {seed})"),
        },
    );
    Ok(if agree { 0 } else { 1 })
}
