use std::collections::BTreeMap;

use proptest::prelude::*;

use gradedpi::algebra::{
    builtin, heisenberg, monolith, nilradical, radical, Budget, GradedAlgebra, Mode, Subspace,
};
use gradedpi::dsl::{parse_basis, shipped_basis};
use gradedpi::engine::{
    compare_spans, consequence_span, identity_kernel, verify_basis, GenLimits, Relation,
};
use gradedpi::field::{make_field, FieldContext};
use gradedpi::freelie::{
    evaluate, evaluate_poly, lyndon_basis, witt_dimension, AlgebraValues, Expr, GradedVar,
    GradingProfile, Multidegree, Normalizer,
};
use gradedpi::linalg::{self, Echelon, Matrix};

fn gf5() -> FieldContext {
    make_field(5, 1).unwrap()
}

fn small_algebra(i: usize, f: &FieldContext) -> GradedAlgebra {
    match i {
        0 => builtin("sl2_trivial", f).unwrap(),
        1 => builtin("b2_z2", f).unwrap().ungraded(),
        2 => builtin("gl2_z2", f).unwrap().ungraded(),
        _ => heisenberg(f),
    }
}

/// An invertible matrix built from raw entries, or None if singular.
fn invertible(f: &FieldContext, n: usize, raw: &[u8]) -> Option<Matrix> {
    let m: Matrix = (0..n)
        .map(|i| (0..n).map(|j| f.element(raw[i * n + j] as usize % 5)).collect())
        .collect();
    (Echelon::from_rows(f, n, m.iter().cloned()).rank() == n).then_some(m)
}

/// Image in old coordinates of a subspace written in the basis `p`.
fn to_old(f: &FieldContext, p: &Matrix, s: &Subspace) -> Subspace {
    let n = p.len();
    let rows = s.basis().iter().map(|v| {
        let mut out = linalg::zeros(f, n);
        for (c, row) in v.iter().zip(p) {
            linalg::add_scaled(f, &mut out, *c, row);
        }
        out
    });
    Subspace::span(f, n, rows)
}

fn vars3() -> Vec<GradedVar> {
    ["y1", "y2", "z1"].iter().map(|s| s.parse().unwrap()).collect()
}

fn tree() -> impl Strategy<Value = Expr> {
    let leaf = (0usize..3).prop_map(|i| Expr::Var(vars3()[i]));
    leaf.prop_recursive(4, 16, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::bracket(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sum(vec![a, b])),
            (-4i64..=4, inner.clone()).prop_map(|(c, a)| Expr::scaled(c, a)),
            (inner, 0usize..3, 1u64..=3).prop_map(|(a, v, k)| Expr::ad_pow(a, Expr::Var(vars3()[v]), k)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn structure_is_basis_independent(alg in 0usize..4, raw in proptest::collection::vec(any::<u8>(), 16)) {
        let f = gf5();
        let a = small_algebra(alg, &f);
        let n = a.dim();
        let Some(p) = invertible(&f, n, &raw) else { return Ok(()) };
        let b = a.change_basis(&p).unwrap();
        let budget = Budget::default();
        for op in [nilradical, radical, monolith] {
            // a non-monolithic algebra stays non-monolithic
            let before = op(&a, Mode::Ungraded, budget).ok();
            let after = op(&b, Mode::Ungraded, budget).ok();
            prop_assert_eq!(after.map(|s| to_old(&f, &p, &s)), before);
        }
    }

    #[test]
    fn normal_form_is_idempotent(t in tree()) {
        let f = gf5();
        let norm = Normalizer::new();
        if let Ok(nf) = norm.normalize(&f, &t, 8) {
            let again = norm.normalize(&f, &nf.to_expr(&f), 8).unwrap();
            prop_assert_eq!(again, nf);
        }
    }

    #[test]
    fn normal_form_evaluates_like_the_tree(t in tree(), seed in proptest::collection::vec(0usize..5, 12)) {
        let f = gf5();
        let alg = builtin("sl2_z2", &f).unwrap();
        let profile = GradingProfile::by_name("Z2").unwrap();
        let Ok(nf) = Normalizer::global().normalize(&f, &t, 8) else { return Ok(()) };
        let mut asg = BTreeMap::new();
        let mut digits = seed.iter();
        for v in vars3() {
            let mut x = alg.zero_vector();
            for i in alg.component(&profile.grade_of(v).unwrap()) {
                x[i] = f.element(*digits.next().unwrap());
            }
            asg.insert(v, x);
        }
        let values = AlgebraValues::new(&alg, &profile, &asg).unwrap();
        prop_assert_eq!(evaluate(&t, &alg, &profile, &asg).unwrap(), evaluate_poly(&values, &nf).unwrap());
    }

    #[test]
    fn lyndon_count_matches_witt(a in 0u32..=4, b in 0u32..=3, c in 0u32..=3) {
        prop_assume!(a + b + c > 0 && a + b + c <= 8);
        let v = vars3();
        let d = Multidegree::new([(v[0], a), (v[1], b), (v[2], c)]);
        prop_assert_eq!(lyndon_basis(&d, 8).unwrap().len() as u64, witt_dimension(&d, 8).unwrap());
    }
}

const PAIRS: [(&str, &str, u32); 3] = [
    ("beta_z2.lie", "sl2_z2", 5),
    ("b2_z2.lie", "b2_z2", 5),
    ("beta3_z2z2.lie", "sl2_z2z2", 5),
];

const CELLS: [&[&str]; 3] = [
    &["y1,y2", "z1,z2", "y1,z1", "y1,y2,z1"],
    &["y1,y2", "z1,z2", "y1:2,z1", "z1,z2,y1"],
    &["x1,y1", "y1,y2", "x1,z1", "x1,y1,z1"],
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn consequences_lie_in_the_kernel(pair in 0usize..3, which in 0usize..4) {
        let (basis, alg, p) = PAIRS[pair];
        let f = make_field(p, 1).unwrap();
        let b = parse_basis(shipped_basis(basis).unwrap(), f.q() as u64).unwrap();
        let a = builtin(alg, &f).unwrap();
        let d: Multidegree = CELLS[pair][which].parse().unwrap();
        let kernel = identity_kernel(&a, &d, 8, Budget::default()).unwrap();
        let cons = consequence_span(&b, &d, GenLimits::default(), &f, Budget::default()).unwrap();
        let rel = compare_spans(&f, &cons.span, &kernel).unwrap().relation;
        prop_assert!(matches!(rel, Relation::Equal | Relation::ASubsetB), "{} at {}: {:?}", basis, d, rel);
    }
}

#[test]
fn thread_count_does_not_change_results() {
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| {
            let f = gf5();
            let alg = builtin("sl2_z2", &f).unwrap();
            let b = parse_basis(shipped_basis("beta_z2.lie").unwrap(), 5).unwrap();
            let reports = verify_basis(&b, &alg, None, Budget::default()).unwrap();
            let zz = parse_basis("profile Z2\nident zz: [z1, z2, z3]\n", 5).unwrap();
            let witness = verify_basis(&zz, &alg, None, Budget::default()).unwrap();
            let kernel = identity_kernel(&alg, &"y1,y2,z1,z2".parse().unwrap(), 8, Budget::default()).unwrap();
            (reports, witness, kernel)
        })
    };
    let one = run(1);
    for threads in [2, 4] {
        assert_eq!(run(threads), one);
    }
}
