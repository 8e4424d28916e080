//! The algebras that appear in the sl₂ grading results, realized inside gl₂.

use crate::field::FieldContext;

use super::{AlgebraError, GradeGroup, GradedAlgebra, Mat2};

pub const BUILTIN_NAMES: &[&str] = &[
    "sl2_z2",
    "sl2_z3",
    "sl2_z2z2",
    "sl2_trivial",
    "gl2_z2",
    "gl2_z",
    "m1_z3",
    "m2_z3",
    "m1_z",
    "m2_z",
    "m_pair_z3",
    "n_z2z2",
    "b2_z2",
];

fn mat(ctx: &FieldContext, m: [[i64; 2]; 2]) -> Mat2 {
    [
        [ctx.from_i64(m[0][0]), ctx.from_i64(m[0][1])],
        [ctx.from_i64(m[1][0]), ctx.from_i64(m[1][1])],
    ]
}

const H: [[i64; 2]; 2] = [[1, 0], [0, -1]];
const E11: [[i64; 2]; 2] = [[1, 0], [0, 0]];
const E22: [[i64; 2]; 2] = [[0, 0], [0, 1]];
const E12: [[i64; 2]; 2] = [[0, 1], [0, 0]];
const E21: [[i64; 2]; 2] = [[0, 0], [1, 0]];
const E12_PLUS_E21: [[i64; 2]; 2] = [[0, 1], [1, 0]];
const E12_MINUS_E21: [[i64; 2]; 2] = [[0, 1], [-1, 0]];

fn matrix_algebra(
    name: &str,
    ctx: &FieldContext,
    group: GradeGroup,
    basis: &[(&str, [[i64; 2]; 2], &[i64])],
) -> Result<GradedAlgebra, AlgebraError> {
    let labels = basis.iter().map(|(l, _, _)| l.to_string()).collect();
    let mats = basis.iter().map(|(_, m, _)| mat(ctx, *m)).collect();
    let grades = basis
        .iter()
        .map(|(_, _, g)| group.element(g))
        .collect::<Result<_, _>>()?;
    GradedAlgebra::from_matrices(name, ctx.clone(), labels, mats, group, grades)
}

fn require_cube_root(name: &str, ctx: &FieldContext) -> Result<(), AlgebraError> {
    if ctx.has_cube_root() {
        Ok(())
    } else {
        Err(AlgebraError::CubeRootMissing {
            name: name.to_string(),
            q: ctx.q(),
        })
    }
}

/// Construct one of [`BUILTIN_NAMES`] over `ctx`.
///
/// The ℤ₃ grading of sl₂ puts `e12` in degree 1 and `e21` in degree −1.
pub fn builtin(name: &str, ctx: &FieldContext) -> Result<GradedAlgebra, AlgebraError> {
    let z2 = GradeGroup::z2;
    let z3 = GradeGroup::z3;
    let zz = GradeGroup::integers;
    if name.ends_with("_z3") {
        require_cube_root(name, ctx)?;
    }
    match name {
        "sl2_z2" => matrix_algebra(
            name,
            ctx,
            z2(),
            &[("h", H, &[0]), ("e12", E12, &[1]), ("e21", E21, &[1])],
        ),
        "sl2_z3" => matrix_algebra(
            name,
            ctx,
            z3(),
            &[("h", H, &[0]), ("e12", E12, &[1]), ("e21", E21, &[-1])],
        ),
        "sl2_z2z2" => matrix_algebra(
            name,
            ctx,
            GradeGroup::z2z2(),
            &[
                ("h", H, &[1, 0]),
                ("p", E12_PLUS_E21, &[0, 1]),
                ("m", E12_MINUS_E21, &[1, 1]),
            ],
        ),
        "sl2_trivial" => matrix_algebra(
            name,
            ctx,
            GradeGroup::trivial(),
            &[("h", H, &[]), ("e12", E12, &[]), ("e21", E21, &[])],
        ),
        "gl2_z2" => matrix_algebra(
            name,
            ctx,
            z2(),
            &[
                ("e11", E11, &[0]),
                ("e22", E22, &[0]),
                ("e12", E12, &[1]),
                ("e21", E21, &[1]),
            ],
        ),
        "gl2_z" => matrix_algebra(
            name,
            ctx,
            zz(),
            &[
                ("e11", E11, &[0]),
                ("e22", E22, &[0]),
                ("e12", E12, &[1]),
                ("e21", E21, &[-1]),
            ],
        ),
        "m1_z3" => matrix_algebra(name, ctx, z3(), &[("h", H, &[0]), ("e12", E12, &[1])]),
        "m2_z3" => matrix_algebra(name, ctx, z3(), &[("h", H, &[0]), ("e21", E21, &[-1])]),
        "m1_z" => matrix_algebra(name, ctx, zz(), &[("h", H, &[0]), ("e12", E12, &[1])]),
        "m2_z" => matrix_algebra(name, ctx, zz(), &[("h", H, &[0]), ("e21", E21, &[-1])]),
        "m_pair_z3" => {
            let m1 = builtin("m1_z3", ctx)?;
            let m2 = builtin("m2_z3", ctx)?;
            let mut p = m1.direct_product(&m2, name)?;
            // label the two Cartan copies apart
            p = relabel(p, &["h1", "e12", "h2", "e21"])?;
            Ok(p)
        }
        "n_z2z2" => {
            let g = GradeGroup::z2z2();
            let parts = [
                ("h", H, [1, 0]),
                ("m", E12_MINUS_E21, [1, 1]),
                ("p", E12_PLUS_E21, [0, 1]),
            ];
            let mut acc: Option<GradedAlgebra> = None;
            for (label, m, grade) in parts {
                let line = matrix_algebra(label, ctx, g.clone(), &[(label, m, &grade)])?;
                acc = Some(match acc {
                    None => line,
                    Some(a) => a.direct_product(&line, name)?,
                });
            }
            Ok(acc.expect("three factors").with_name(name))
        }
        "b2_z2" => matrix_algebra(name, ctx, z2(), &[("e11", E11, &[0]), ("e12", E12, &[1])]),
        _ => Err(AlgebraError::UnknownName(name.to_string())),
    }
}

fn relabel(a: GradedAlgebra, labels: &[&str]) -> Result<GradedAlgebra, AlgebraError> {
    let n = a.dim();
    let mut structure = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                structure.push(a.structure_constant(i, j, k));
            }
        }
    }
    GradedAlgebra::new(
        a.name(),
        a.ctx().clone(),
        labels.iter().map(|s| s.to_string()).collect(),
        structure,
        a.group().clone(),
        a.grades().to_vec(),
    )
}

/// Abelian algebra of dimension `n`, trivially graded.
pub fn abelian(ctx: &FieldContext, n: usize) -> GradedAlgebra {
    let group = GradeGroup::trivial();
    GradedAlgebra::new(
        format!("abelian{n}"),
        ctx.clone(),
        (1..=n).map(|i| format!("a{i}")).collect(),
        vec![ctx.zero(); n * n * n],
        group.clone(),
        vec![group.zero(); n],
    )
    .expect("zero bracket is a Lie algebra")
}

/// Heisenberg algebra `[x, y] = z` with `z` central, trivially graded.
pub fn heisenberg(ctx: &FieldContext) -> GradedAlgebra {
    let n = 3;
    let mut structure = vec![ctx.zero(); n * n * n];
    let at = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
    structure[at(0, 1, 2)] = ctx.one();
    structure[at(1, 0, 2)] = ctx.neg(ctx.one());
    let group = GradeGroup::trivial();
    GradedAlgebra::new(
        "heisenberg",
        ctx.clone(),
        vec!["x".into(), "y".into(), "z".into()],
        structure,
        group.clone(),
        vec![group.zero(); n],
    )
    .expect("Heisenberg algebra is a Lie algebra")
}
