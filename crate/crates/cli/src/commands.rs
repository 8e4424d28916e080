use std::path::Path;

use serde_json::{json, Value};

use gradedpi::algebra::{
    self, builtin, heisenberg, AlgebraError, Budget, GradedAlgebra, Mode, Subspace, BUILTIN_NAMES,
};
use gradedpi::dsl::{parse_basis, shipped_basis, BasisFile};
use gradedpi::engine::{
    self, cell_json, compare_algebra_kernels, consequence_span, identity_kernel, multilinear_cells,
    profile_for, verify_basis, CellSpan, GenLimits, Relation,
};
use gradedpi::field::FieldContext;
use gradedpi::freelie::{Multidegree, DEFAULT_DEGREE_CAP};

pub type Outcome = Result<u8, String>;

#[derive(Debug, Clone, Copy)]
pub struct Output {
    pub json: bool,
}

impl Output {
    pub fn emit(&self, value: Value, text: impl FnOnce() -> String) {
        if self.json {
            println!("{}", serde_json::to_string_pretty(&value).expect("reports serialize"));
        } else {
            println!("{}", text());
        }
    }
}

fn field(spec: &str) -> Result<FieldContext, String> {
    FieldContext::from_spec(spec).map_err(|e| e.to_string())
}

fn default_q(name: &str) -> &'static str {
    if name.ends_with("_z3") {
        "7"
    } else {
        "5"
    }
}

fn algebra_error(e: AlgebraError) -> String {
    e.to_string()
}

pub fn load_algebra(name: &str, field_spec: Option<&str>) -> Result<GradedAlgebra, String> {
    if name.ends_with(".json") || Path::new(name).is_file() {
        let alg = algebra::load_algebra(Path::new(name)).map_err(algebra_error)?;
        if let Some(spec) = field_spec {
            if field(spec)?.spec() != alg.ctx().spec() {
                return Err(format!(
                    "{name} is defined over GF({}), not GF({spec})",
                    alg.ctx().q()
                ));
            }
        }
        return Ok(alg);
    }
    let ctx = field(field_spec.unwrap_or(default_q(name)))?;
    if name == "heisenberg" {
        return Ok(heisenberg(&ctx));
    }
    builtin(name, &ctx).map_err(algebra_error)
}

fn basis_text(name: &str) -> Result<String, String> {
    match std::fs::read_to_string(name) {
        Ok(t) => Ok(t),
        Err(e) => shipped_basis(name)
            .map(str::to_string)
            .ok_or_else(|| format!("{name}: {e}")),
    }
}

fn profile_line(text: &str) -> Option<&str> {
    text.lines()
        .map(str::trim)
        .find_map(|l| l.strip_prefix("profile "))
        .map(str::trim)
}

fn load_basis(name: &str, ctx: &FieldContext) -> Result<BasisFile, String> {
    parse_basis(&basis_text(name)?, ctx.q() as u64).map_err(|e| format!("{name}: {e}"))
}

/// The field for a basis used on its own: explicit, or by its profile.
fn basis_field(name: &str, field_spec: Option<&str>) -> Result<FieldContext, String> {
    match field_spec {
        Some(s) => field(s),
        None => {
            let text = basis_text(name)?;
            field(if profile_line(&text) == Some("Z3") { "7" } else { "5" })
        }
    }
}

fn cell(text: &str) -> Result<Multidegree, String> {
    text.parse().map_err(|e| format!("bad cell `{text}`: {e}"))
}

fn limits(text: Option<&str>) -> Result<GenLimits, String> {
    let mut l = GenLimits::default();
    let Some(text) = text else { return Ok(l) };
    let bad = || format!("bad limits `{text}`, expected s,r or s,r,margin");
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if !(2..=3).contains(&parts.len()) {
        return Err(bad());
    }
    l.s = parts[0].parse().map_err(|_| bad())?;
    l.r = parts[1].parse().map_err(|_| bad())?;
    if let Some(m) = parts.get(2) {
        l.margin = Some(m.parse().map_err(|_| bad())?);
    }
    Ok(l)
}

fn subspace_text(alg: &GradedAlgebra, s: &Subspace) -> String {
    if s.is_zero() {
        "0".into()
    } else {
        format!("span{{{}}}", s.describe(alg).join(", "))
    }
}

fn span_lines(span: &CellSpan, ctx: &FieldContext) -> String {
    let mut s = format!("ambient dim {}, dim {}", span.ambient_dim(), span.dim());
    for t in span.texts(ctx) {
        s.push_str(&format!("\n  {t}"));
    }
    s
}

pub fn algebra_list(out: Output) -> Outcome {
    let mut rows = Vec::new();
    for &name in BUILTIN_NAMES.iter().chain(["heisenberg"].iter()) {
        let alg = load_algebra(name, None)?;
        rows.push((name, alg.group().name(), alg.dim(), alg.ctx().q()));
    }
    out.emit(
        json!({
            "op": "algebra list",
            "algebras": rows.iter().map(|(n, g, d, q)| json!({
                "name": n, "group": g, "dim": d, "default_field": q.to_string(),
            })).collect::<Vec<_>>(),
        }),
        || {
            rows.iter()
                .map(|(n, g, d, q)| format!("{n:<12} {g:<8} dim {d}  GF({q})"))
                .collect::<Vec<_>>()
                .join("\n")
        },
    );
    Ok(0)
}

pub fn algebra_show(out: Output, name: &str, field_spec: Option<&str>) -> Outcome {
    let alg = load_algebra(name, field_spec)?;
    let ctx = alg.ctx();
    let brackets: Vec<(String, String, String)> = (0..alg.dim())
        .flat_map(|i| (i + 1..alg.dim()).map(move |j| (i, j)))
        .map(|(i, j)| {
            let v = alg.bracket(&alg.basis(i), &alg.basis(j));
            (alg.labels()[i].clone(), alg.labels()[j].clone(), alg.format_element(&v))
        })
        .filter(|(_, _, v)| v != "0")
        .collect();
    out.emit(
        json!({
            "op": "algebra show",
            "algebra": alg.name(),
            "field": ctx.spec(),
            "group": alg.group().name(),
            "basis": alg.labels(),
            "grades": alg.grades().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "brackets": brackets.iter().map(|(a, b, v)| json!([a, b, v])).collect::<Vec<_>>(),
        }),
        || {
            let mut s = format!(
                "{} over {ctx}, graded by {}, dim {}",
                alg.name(),
                alg.group().name(),
                alg.dim()
            );
            for (l, g) in alg.labels().iter().zip(alg.grades()) {
                s.push_str(&format!("\n  {l}: grade {g}"));
            }
            for (a, b, v) in &brackets {
                s.push_str(&format!("\n  [{a}, {b}] = {v}"));
            }
            s
        },
    );
    Ok(0)
}

pub fn algebra_validate(out: Output, path: &Path) -> Outcome {
    let name = path.display().to_string();
    match algebra::load_algebra(path) {
        Ok(alg) => {
            out.emit(
                json!({
                    "op": "algebra validate",
                    "algebra": alg.name(),
                    "field": alg.ctx().spec(),
                    "dim": alg.dim(),
                    "verdict": "valid",
                }),
                || format!("{name}: valid, {} of dim {} over {}", alg.name(), alg.dim(), alg.ctx()),
            );
            Ok(0)
        }
        Err(
            e @ (AlgebraError::Antisymmetry { .. }
            | AlgebraError::JacobiViolation { .. }
            | AlgebraError::GradingViolation { .. }
            | AlgebraError::NotClosed { .. }
            | AlgebraError::LinearlyDependent
            | AlgebraError::CubeRootMissing { .. }),
        ) => {
            out.emit(
                json!({ "op": "algebra validate", "verdict": "invalid", "reason": e.to_string() }),
                || format!("{name}: invalid: {e}"),
            );
            Ok(1)
        }
        Err(e) => Err(format!("{name}: {e}")),
    }
}

pub fn verify(
    out: Output,
    alg: &str,
    field_spec: Option<&str>,
    basis: &str,
    ident: Option<&str>,
) -> Outcome {
    let alg = load_algebra(alg, field_spec)?;
    let b = load_basis(basis, alg.ctx())?;
    if let Some(n) = ident {
        if b.get(n).is_none() {
            return Err(format!("{basis} has no identity named `{n}`"));
        }
    }
    let reports = verify_basis(&b, &alg, ident, Budget::from_env()).map_err(|e| e.to_string())?;
    let holds = reports.iter().all(|r| r.holds);
    out.emit(
        json!({
            "op": "verify",
            "algebra": alg.name(),
            "field": alg.ctx().spec(),
            "basis": basis,
            "reports": reports.iter().map(|r| r.to_json(&alg)).collect::<Vec<_>>(),
            "verdict": if holds { "holds" } else { "fails" },
        }),
        || {
            let mut s: Vec<String> = reports.iter().map(|r| r.to_text(&alg)).collect();
            let held = reports.iter().filter(|r| r.holds).count();
            s.push(format!("{held}/{} identities hold on {} over {}", reports.len(), alg.name(), alg.ctx()));
            s.join("\n")
        },
    );
    Ok(if holds { 0 } else { 1 })
}

pub fn kernel(out: Output, alg: &str, field_spec: Option<&str>, cell_text: &str) -> Outcome {
    let alg = load_algebra(alg, field_spec)?;
    let d = cell(cell_text)?;
    let span = identity_kernel(&alg, &d, DEFAULT_DEGREE_CAP, Budget::from_env()).map_err(|e| e.to_string())?;
    let ctx = alg.ctx();
    let mut v = span.to_json(ctx);
    let m = v.as_object_mut().expect("object");
    m.insert("op".into(), json!("kernel"));
    m.insert("algebra".into(), json!(alg.name()));
    m.insert("field".into(), json!(ctx.spec()));
    m.insert("verdict".into(), json!("exact"));
    out.emit(v, || {
        format!("identities of {} over {ctx} at {d}\n{}", alg.name(), span_lines(&span, ctx))
    });
    Ok(0)
}

pub fn consequences(
    out: Output,
    basis: &str,
    field_spec: Option<&str>,
    cell_text: &str,
    limits_text: Option<&str>,
) -> Outcome {
    let ctx = basis_field(basis, field_spec)?;
    let b = load_basis(basis, &ctx)?;
    let d = cell(cell_text)?;
    let l = limits(limits_text)?;
    let report = consequence_span(&b, &d, l, &ctx, Budget::from_env()).map_err(|e| e.to_string())?;
    let mut v = report.to_json(&ctx);
    let m = v.as_object_mut().expect("object");
    m.insert("basis".into(), json!(basis));
    m.insert("field".into(), json!(ctx.spec()));
    out.emit(v, || {
        let mut s = format!(
            "consequences of {basis} over {ctx} at {d} (lower bound)\n{}\n{} instances, {} skipped",
            span_lines(&report.span, &ctx),
            report.instances,
            report.skipped
        );
        if !report.dropped.is_empty() {
            s.push_str(&format!("\ndropped: {}", report.dropped.join(", ")));
        }
        if let Some(w) = &report.warning {
            s.push_str(&format!("\nwarning: {w}"));
        }
        s
    });
    Ok(0)
}

enum Source {
    Kernel(String),
    Consequences(String),
}

fn source(text: &str) -> Result<Source, String> {
    match text.split_once(':') {
        Some(("kernel", a)) => Ok(Source::Kernel(a.to_string())),
        Some(("consequences", b)) => Ok(Source::Consequences(b.to_string())),
        _ => Err(format!("bad span source `{text}`, expected kernel:ALGEBRA or consequences:BASIS")),
    }
}

fn source_field(s: &Source) -> Result<FieldContext, String> {
    match s {
        Source::Kernel(a) => Ok(load_algebra(a, None)?.ctx().clone()),
        Source::Consequences(b) => basis_field(b, None),
    }
}

fn source_span(s: &Source, ctx: &FieldContext, d: &Multidegree, l: GenLimits) -> Result<CellSpan, String> {
    let budget = Budget::from_env();
    match s {
        Source::Kernel(a) => {
            let alg = load_algebra(a, Some(&ctx.spec()))?;
            identity_kernel(&alg, d, DEFAULT_DEGREE_CAP, budget).map_err(|e| e.to_string())
        }
        Source::Consequences(b) => {
            let basis = load_basis(b, ctx)?;
            Ok(consequence_span(&basis, d, l, ctx, budget).map_err(|e| e.to_string())?.span)
        }
    }
}

pub fn compare_spans(
    out: Output,
    a: &str,
    b: &str,
    cell_text: &str,
    field_spec: Option<&str>,
    limits_text: Option<&str>,
) -> Outcome {
    let (sa, sb) = (source(a)?, source(b)?);
    let ctx = match field_spec {
        Some(s) => field(s)?,
        None => source_field(&sa)?,
    };
    let d = cell(cell_text)?;
    let l = limits(limits_text)?;
    let span_a = source_span(&sa, &ctx, &d, l)?;
    let span_b = source_span(&sb, &ctx, &d, l)?;
    let cmp = engine::compare_spans(&ctx, &span_a, &span_b).map_err(|e| e.to_string())?;
    out.emit(
        json!({
            "op": "compare-spans",
            "a": a,
            "b": b,
            "field": ctx.spec(),
            "cell": cell_json(&d),
            "ambient_dim": span_a.ambient_dim(),
            "dim_a": cmp.dim_a,
            "dim_b": cmp.dim_b,
            "verdict": cmp.relation.as_str(),
        }),
        || {
            format!(
                "{a} (dim {}) vs {b} (dim {}) at {d} over {ctx}: {}",
                cmp.dim_a,
                cmp.dim_b,
                cmp.relation.as_str()
            )
        },
    );
    Ok(if cmp.relation == Relation::Equal { 0 } else { 1 })
}

pub fn compare_kernels(
    out: Output,
    a: &str,
    b: &str,
    field_spec: Option<&str>,
    max_total: u32,
    multilinear: bool,
    cells: &[String],
) -> Outcome {
    if !multilinear && cells.is_empty() {
        return Err("give --multilinear or at least one --cell".into());
    }
    let alg_a = load_algebra(a, field_spec)?;
    let spec = alg_a.ctx().spec();
    let alg_b = load_algebra(b, Some(field_spec.unwrap_or(&spec)))?;
    let mut ds = Vec::new();
    if multilinear {
        ds.extend(multilinear_cells(&profile_for(&alg_a).map_err(|e| e.to_string())?, max_total));
    }
    for c in cells {
        ds.push(cell(c)?);
    }
    let verdicts = compare_algebra_kernels(&alg_a, &alg_b, &ds, DEFAULT_DEGREE_CAP, Budget::from_env())
        .map_err(|e| e.to_string())?;
    let equal = verdicts.iter().all(|v| v.relation == Relation::Equal);
    out.emit(
        json!({
            "op": "compare-kernels",
            "a": alg_a.name(),
            "b": alg_b.name(),
            "field": alg_a.ctx().spec(),
            "cells": verdicts.iter().map(|v| v.to_json()).collect::<Vec<_>>(),
            "verdict": if equal { "equal" } else { "differ" },
        }),
        || {
            let mut s: Vec<String> = verdicts
                .iter()
                .map(|v| {
                    format!(
                        "{:<24} ambient {:>2}  {} {:>2}  {} {:>2}  {}",
                        v.cell.to_string(),
                        v.ambient_dim,
                        alg_a.name(),
                        v.dim_a,
                        alg_b.name(),
                        v.dim_b,
                        v.relation.as_str()
                    )
                })
                .collect();
            let n = verdicts.iter().filter(|v| v.relation == Relation::Equal).count();
            s.push(format!("{n}/{} cells equal over {}", verdicts.len(), alg_a.ctx()));
            s.join("\n")
        },
    );
    Ok(if equal { 0 } else { 1 })
}

pub fn analyze(out: Output, name: &str, field_spec: Option<&str>, ungraded: bool) -> Outcome {
    let alg = load_algebra(name, field_spec)?;
    let mode = if ungraded { Mode::Ungraded } else { Mode::Graded };
    let budget = Budget::from_env();
    let budget_err = |e: AlgebraError| e.to_string();
    let whole = Subspace::whole(&alg);
    let center = algebra::center(&alg);
    let derived = algebra::bracket_span(&alg, &whole, &whole);
    let nil = algebra::nilradical(&alg, mode, budget).map_err(budget_err)?;
    let rad = algebra::radical(&alg, mode, budget).map_err(budget_err)?;
    let (mono, minimal) = match algebra::monolith(&alg, mode, budget) {
        Ok(m) => (Some(m), Vec::new()),
        Err(AlgebraError::NotMonolithic { minimal }) => (None, minimal),
        Err(e) => return Err(e.to_string()),
    };
    let a_alg = algebra::is_a_algebra(&alg, mode, budget).map_err(budget_err)?;
    let splitting = algebra::derived_splitting(&alg, mode, budget).map_err(budget_err)?;
    let sheina = mono.as_ref().map(|_| splitting.is_none());
    let premet = algebra::premet_predicates(&alg, budget).map_err(budget_err)?;
    let sub = |s: &Subspace| subspace_text(&alg, s);
    out.emit(
        json!({
            "op": "analyze",
            "algebra": alg.name(),
            "field": alg.ctx().spec(),
            "mode": mode,
            "center": center.describe(&alg),
            "derived": derived.describe(&alg),
            "nilradical": nil.describe(&alg),
            "radical": rad.describe(&alg),
            "monolith": mono.as_ref().map(|m| m.describe(&alg)),
            "minimal_ideals": minimal.iter().map(|m| m.describe(&alg)).collect::<Vec<_>>(),
            "a_algebra": a_alg.holds,
            "a_algebra_witness": a_alg.witness.as_ref().map(|w| w.describe(&alg)),
            "sheina_criterion": sheina,
            "derived_splitting": splitting.as_ref().map(|(x, y)| [x.describe(&alg), y.describe(&alg)]),
            "premet": premet,
        }),
        || {
            let mut s = vec![
                format!("{} over {}, {} analysis", alg.name(), alg.ctx(), if ungraded { "ungraded" } else { "graded" }),
                format!("center: {}", sub(&center)),
                format!("derived: {}", sub(&derived)),
                format!("nilradical: {}", sub(&nil)),
                format!("radical: {}", sub(&rad)),
            ];
            match &mono {
                Some(m) => s.push(format!("monolith: {}", sub(m))),
                None => s.push(format!(
                    "monolith: none, minimal ideals {}",
                    minimal.iter().map(sub).collect::<Vec<_>>().join(", ")
                )),
            }
            s.push(match &a_alg.witness {
                None => "A-algebra: yes".into(),
                Some(w) => format!("A-algebra: no, nilpotent non-abelian {}", sub(w)),
            });
            s.push(match sheina {
                Some(true) => "Sheina criterion: holds".into(),
                Some(false) => "Sheina criterion: fails".into(),
                None => "Sheina criterion: not applicable (not monolithic)".into(),
            });
            if let Some((x, y)) = &splitting {
                s.push(format!("derived splitting: {} + {}", sub(x), sub(y)));
            }
            s.push(format!(
                "[L,L] meets Z(L) trivially: {}; graded-semisimple: {}; graded-simple sum: {}",
                premet.derived_meets_center_trivially,
                premet.semisimple,
                premet.graded_simple_decomposition.map_or("n/a".into(), |b| b.to_string())
            ));
            s.push(format!("hypothesis: {}", premet.hypothesis));
            s.join("\n")
        },
    );
    Ok(0)
}

pub fn spectrum(out: Output, name: &str, field_spec: Option<&str>, element: &str) -> Outcome {
    let alg = load_algebra(name, field_spec)?;
    let u = alg.parse_element(element).map_err(|e| e.to_string())?;
    let rep = algebra::spectrum(&alg, &u);
    let ctx = alg.ctx();
    let mut v = rep.to_json(&alg);
    let m = v.as_object_mut().expect("object");
    m.insert("op".into(), json!("spectrum"));
    m.insert("algebra".into(), json!(alg.name()));
    m.insert("field".into(), json!(ctx.spec()));
    out.emit(v, || {
        let mut s = vec![
            format!("ad({}) on {} over {ctx}", alg.format_element(&u), alg.name()),
            format!("minimal polynomial: {}", algebra::poly_to_string(ctx, &rep.min_poly)),
        ];
        for (e, sp) in rep.eigenvalues.iter().zip(&rep.eigenspaces) {
            s.push(format!("  eigenvalue {}: {}", ctx.format(*e), subspace_text(&alg, sp)));
        }
        s.push(format!("diagonalizable: {}", rep.diagonalizable));
        s.push(format!("homogeneous eigenbasis: {}", rep.homogeneous_eigenbasis));
        s.join("\n")
    });
    Ok(0)
}
