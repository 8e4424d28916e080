use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::{GradedVar, Multidegree};

/// A Lie expression tree.
///
/// `AdPow { base, op, exp }` is `base·(ad op)^exp`, i.e. `[base, op, …, op]`
/// with `exp` copies of `op`.  The empty sum is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Var(GradedVar),
    Scaled(i64, Box<Expr>),
    Sum(Vec<Expr>),
    Bracket(Box<Expr>, Box<Expr>),
    AdPow {
        base: Box<Expr>,
        op: Box<Expr>,
        exp: u64,
    },
}

impl Expr {
    pub fn var(family: char, index: u32) -> Expr {
        Expr::Var(GradedVar::new(family, index))
    }

    pub fn zero() -> Expr {
        Expr::Sum(Vec::new())
    }

    pub fn bracket(a: Expr, b: Expr) -> Expr {
        Expr::Bracket(Box::new(a), Box::new(b))
    }

    /// `[base, op^exp]`; an exponent of 1 is a plain bracket.
    pub fn ad_pow(base: Expr, op: Expr, exp: u64) -> Expr {
        if exp == 1 {
            Expr::bracket(base, op)
        } else {
            Expr::AdPow {
                base: Box::new(base),
                op: Box::new(op),
                exp,
            }
        }
    }

    /// `[e₁, e₂, …, eₙ]` bracketed from the left.
    pub fn left_normed(items: impl IntoIterator<Item = Expr>) -> Expr {
        let mut it = items.into_iter();
        let first = it.next().expect("at least one slot");
        it.fold(first, Expr::bracket)
    }

    pub fn scaled(c: i64, e: Expr) -> Expr {
        if c == 1 {
            e
        } else {
            Expr::Scaled(c, Box::new(e))
        }
    }

    pub fn neg(e: Expr) -> Expr {
        Expr::scaled(-1, e)
    }

    pub fn sum(items: Vec<Expr>) -> Expr {
        if items.len() == 1 {
            items.into_iter().next().expect("one item")
        } else {
            Expr::Sum(items)
        }
    }

    pub fn sub(a: Expr, b: Expr) -> Expr {
        Expr::Sum(vec![a, Expr::neg(b)])
    }

    pub fn vars(&self) -> BTreeSet<GradedVar> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<GradedVar>) {
        match self {
            Expr::Var(v) => {
                out.insert(*v);
            }
            Expr::Scaled(_, e) => e.collect_vars(out),
            Expr::Sum(items) => items.iter().for_each(|e| e.collect_vars(out)),
            Expr::Bracket(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Expr::AdPow { base, op, .. } => {
                base.collect_vars(out);
                op.collect_vars(out);
            }
        }
    }

    /// Multidegrees of the homogeneous parts the tree can produce (an
    /// over-approximation: cancellation is not tracked).
    pub fn degrees(&self) -> BTreeSet<Multidegree> {
        match self {
            Expr::Var(v) => BTreeSet::from([Multidegree::new([(*v, 1)])]),
            Expr::Scaled(c, e) => {
                if *c == 0 {
                    BTreeSet::new()
                } else {
                    e.degrees()
                }
            }
            Expr::Sum(items) => items.iter().flat_map(Expr::degrees).collect(),
            Expr::Bracket(a, b) => combine(&a.degrees(), &b.degrees()),
            Expr::AdPow { base, op, exp } => {
                let o = op.degrees();
                let mut acc = base.degrees();
                for _ in 0..*exp {
                    acc = combine(&acc, &o);
                    if acc.is_empty() {
                        break;
                    }
                }
                acc
            }
        }
    }

    /// Least total degree among the homogeneous parts, without expanding
    /// large powers.
    pub fn min_total_degree(&self) -> Option<u64> {
        match self {
            Expr::Var(_) => Some(1),
            Expr::Scaled(c, e) => {
                if *c == 0 {
                    None
                } else {
                    e.min_total_degree()
                }
            }
            Expr::Sum(items) => items.iter().filter_map(Expr::min_total_degree).min(),
            Expr::Bracket(a, b) => Some(a.min_total_degree()? + b.min_total_degree()?),
            Expr::AdPow { base, op, exp } => {
                Some(base.min_total_degree()? + exp * op.min_total_degree()?)
            }
        }
    }

    /// Greatest total degree among the homogeneous parts.
    pub fn max_total_degree(&self) -> Option<u64> {
        match self {
            Expr::Var(_) => Some(1),
            Expr::Scaled(c, e) => {
                if *c == 0 {
                    None
                } else {
                    e.max_total_degree()
                }
            }
            Expr::Sum(items) => items.iter().filter_map(Expr::max_total_degree).max(),
            Expr::Bracket(a, b) => Some(a.max_total_degree()? + b.max_total_degree()?),
            Expr::AdPow { base, op, exp } => {
                Some(base.max_total_degree()? + exp * op.max_total_degree()?)
            }
        }
    }

    /// Greatest exponent of each variable over the homogeneous parts.
    pub fn max_var_degrees(&self) -> BTreeMap<GradedVar, u64> {
        match self {
            Expr::Var(v) => BTreeMap::from([(*v, 1)]),
            Expr::Scaled(_, e) => e.max_var_degrees(),
            Expr::Sum(items) => {
                let mut out = BTreeMap::new();
                for e in items {
                    for (v, d) in e.max_var_degrees() {
                        let slot = out.entry(v).or_insert(0);
                        *slot = (*slot).max(d);
                    }
                }
                out
            }
            Expr::Bracket(a, b) => add_maps(a.max_var_degrees(), &b.max_var_degrees(), 1),
            Expr::AdPow { base, op, exp } => {
                add_maps(base.max_var_degrees(), &op.max_var_degrees(), *exp)
            }
        }
    }

    /// Replace every variable by the given expression.
    pub fn substitute(&self, f: &impl Fn(GradedVar) -> Expr) -> Expr {
        match self {
            Expr::Var(v) => f(*v),
            Expr::Scaled(c, e) => Expr::Scaled(*c, Box::new(e.substitute(f))),
            Expr::Sum(items) => Expr::Sum(items.iter().map(|e| e.substitute(f)).collect()),
            Expr::Bracket(a, b) => Expr::bracket(a.substitute(f), b.substitute(f)),
            Expr::AdPow { base, op, exp } => Expr::AdPow {
                base: Box::new(base.substitute(f)),
                op: Box::new(op.substitute(f)),
                exp: *exp,
            },
        }
    }
}

fn combine(a: &BTreeSet<Multidegree>, b: &BTreeSet<Multidegree>) -> BTreeSet<Multidegree> {
    a.iter().flat_map(|x| b.iter().map(move |y| x.add(y))).collect()
}

fn add_maps(
    mut a: BTreeMap<GradedVar, u64>,
    b: &BTreeMap<GradedVar, u64>,
    k: u64,
) -> BTreeMap<GradedVar, u64> {
    for (v, d) in b {
        *a.entry(*v).or_insert(0) += k * d;
    }
    a
}

// Printing follows the basis-file grammar so that the output parses back
// to the same tree.

fn is_chain(e: &Expr) -> bool {
    matches!(e, Expr::Bracket(..) | Expr::AdPow { .. })
}

/// Slots of a bracket chain, innermost first.
fn write_slots(e: &Expr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match e {
        Expr::Bracket(a, b) => {
            write_slots(a, f)?;
            write!(f, ", {b}")
        }
        Expr::AdPow { base, op, exp } => {
            write_slots(base, f)?;
            write!(f, ", ")?;
            write_power_base(op, f)?;
            write!(f, "^{exp}")
        }
        other => write!(f, "{other}"),
    }
}

fn write_power_base(e: &Expr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match e {
        Expr::Var(_) | Expr::Bracket(..) | Expr::AdPow { .. } => write!(f, "{e}"),
        _ => write!(f, "({e})"),
    }
}

fn write_factor(e: &Expr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match e {
        Expr::Sum(items) if !items.is_empty() => write!(f, "({e})"),
        Expr::Scaled(..) => write!(f, "({e})"),
        _ => write!(f, "{e}"),
    }
}

fn write_scaled(c: i64, e: &Expr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if c == -1 {
        write!(f, "-")?;
    } else {
        write!(f, "{c}*")?;
    }
    write_factor(e, f)
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Var(v) => write!(f, "{v}"),
            Expr::Scaled(c, e) => write_scaled(*c, e, f),
            Expr::Sum(items) => {
                if items.is_empty() {
                    return write!(f, "0");
                }
                for (i, item) in items.iter().enumerate() {
                    match item {
                        Expr::Scaled(c, e) if i > 0 && *c < 0 => {
                            write!(f, " - ")?;
                            if *c != -1 {
                                write!(f, "{}*", -c)?;
                            }
                            write_factor(e, f)?;
                        }
                        Expr::Sum(_) => {
                            if i > 0 {
                                write!(f, " + ")?;
                            }
                            write!(f, "({item})")?;
                        }
                        _ => {
                            if i > 0 {
                                write!(f, " + ")?;
                            }
                            write!(f, "{item}")?;
                        }
                    }
                }
                Ok(())
            }
            Expr::Bracket(..) | Expr::AdPow { .. } => {
                debug_assert!(is_chain(self));
                write!(f, "[")?;
                write_slots(self, f)?;
                write!(f, "]")
            }
        }
    }
}
