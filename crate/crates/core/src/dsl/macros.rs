use super::MacroName;
use crate::freelie::Expr;

/// `[u, v^(q²+2)] − [u, v³]`.
pub fn sem1(u: Expr, v: Expr, q: u64) -> Expr {
    Expr::sub(Expr::ad_pow(u.clone(), v.clone(), q * q + 2), Expr::ad_pow(u, v, 3))
}

/// The six-term polynomial
///
/// ```text
/// [u,v] − [u,v,u^(q²−1)] − [u,v^q] + [u,v,u^(q²−1),v^(q−1)]
///   + [u,v,(u^(q²) − u),[u,v]^(q−2),(v^(q²) − v)]
///   − [v,([u^(q²) − u, v])^q,(v^(q²−2) − v^(q−2))]
/// ```
///
/// A slot `P = Σ cᵢ aᵢ^kᵢ` acts on the left-normed prefix `X` as
/// `Σ cᵢ X(ad aᵢ)^kᵢ`, and `[P, s] = −s·P(ad)`.
pub fn sem2(u: Expr, v: Expr, q: u64) -> Expr {
    let uv = Expr::bracket(u.clone(), v.clone());
    let frob = |x: Expr, a: &Expr, k: u64| {
        Expr::sub(Expr::ad_pow(x.clone(), a.clone(), k), Expr::bracket(x, a.clone()))
    };

    let t1 = uv.clone();
    let t2 = Expr::ad_pow(uv.clone(), u.clone(), q * q - 1);
    let t3 = Expr::ad_pow(u.clone(), v.clone(), q);
    let t4 = Expr::ad_pow(t2.clone(), v.clone(), q - 1);

    let x = frob(uv.clone(), &u, q * q);
    let x = Expr::ad_pow(x, uv, q - 2);
    let t5 = frob(x, &v, q * q);

    let inner = Expr::neg(frob(v.clone(), &u, q * q));
    let y = Expr::ad_pow(v.clone(), inner, q);
    let t6 = Expr::sub(
        Expr::ad_pow(y.clone(), v.clone(), q * q - 2),
        Expr::ad_pow(y, v, q - 2),
    );

    Expr::Sum(vec![
        t1,
        Expr::neg(t2),
        Expr::neg(t3),
        t4,
        t5,
        Expr::neg(t6),
    ])
}

pub fn expand_macro(name: MacroName, u: Expr, v: Expr, q: u64) -> Expr {
    match name {
        MacroName::Sem1 => sem1(u, v, q),
        MacroName::Sem2 => sem2(u, v, q),
    }
}
