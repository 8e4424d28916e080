//! Text syntax for graded Lie polynomials and identity-basis files.
//!
//! See `docs/lie-format.md` for the grammar.

mod macros;
mod parser;

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::freelie::{Expr, GradingProfile};

pub use macros::{expand_macro, sem1, sem2};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum DslError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("variable family `{family}` at byte {pos} is not declared by the profile")]
    UnknownFamily { family: char, pos: usize },
    #[error("exponent at byte {pos} evaluates to {value}, which is not positive")]
    NonPositiveExponent { value: i128, pos: usize },
    #[error("profile mismatch: {0}")]
    ProfileMismatch(String),
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<DslError>,
    },
}

impl DslError {
    /// The error with any line wrapper removed.
    pub fn root(&self) -> &DslError {
        match self {
            DslError::Line { source, .. } => source.root(),
            other => other,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MacroName {
    Sem1,
    Sem2,
}

impl MacroName {
    pub fn from_ident(s: &str) -> Option<MacroName> {
        match s {
            "Sem1" => Some(MacroName::Sem1),
            "Sem2" => Some(MacroName::Sem2),
            _ => None,
        }
    }
}

/// Parse one expression, substituting `q` in exponents.
pub fn parse_poly(text: &str, profile: &GradingProfile, q: u64) -> Result<Expr, DslError> {
    let mut p = parser::Parser::new(text, profile, q);
    let e = p.element()?;
    p.finish()?;
    Ok(e)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identity {
    pub name: String,
    pub expr: Expr,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisFile {
    pub profile: GradingProfile,
    pub identities: Vec<Identity>,
}

impl BasisFile {
    pub fn get(&self, name: &str) -> Option<&Expr> {
        self.identities.iter().find(|i| i.name == name).map(|i| &i.expr)
    }

    /// Render in basis-file syntax with every macro and `q` expanded.
    pub fn to_text(&self) -> String {
        let mut out = format!("profile {}\n", self.profile.name());
        for id in &self.identities {
            let _ = writeln!(out, "ident {}: {}", id.name, id.expr);
        }
        out
    }
}

pub fn parse_basis(text: &str, q: u64) -> Result<BasisFile, DslError> {
    let mut profile: Option<GradingProfile> = None;
    let mut identities = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let at = |e: DslError| DslError::Line {
            line: n + 1,
            source: Box::new(e),
        };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(name) = line.strip_prefix("profile ") {
            let name = name.trim();
            if profile.is_some() {
                return Err(at(DslError::ProfileMismatch("second profile header".into())));
            }
            profile = Some(GradingProfile::by_name(name).ok_or_else(|| {
                at(DslError::ProfileMismatch(format!("unknown profile `{name}`")))
            })?);
            continue;
        }
        let Some(rest) = line.strip_prefix("ident ") else {
            return Err(at(DslError::Parse {
                pos: 0,
                msg: "expected `profile` or `ident`".into(),
            }));
        };
        let prof = profile.as_ref().ok_or_else(|| {
            at(DslError::ProfileMismatch("`ident` before the profile header".into()))
        })?;
        let (name, body) = rest.split_once(':').ok_or_else(|| {
            at(DslError::Parse {
                pos: 0,
                msg: "expected `ident <name>: <expression>`".into(),
            })
        })?;
        let name = name.trim();
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(at(DslError::Parse {
                pos: 0,
                msg: format!("bad identity name `{name}`"),
            }));
        }
        let expr = match body.split_once('=') {
            None => parse_poly(body, prof, q),
            Some((lhs, rhs)) => parse_poly(lhs, prof, q).and_then(|l| {
                let r = parse_poly(rhs, prof, q).map_err(|e| shift(e, lhs.len() + 1))?;
                Ok(Expr::sub(l, r))
            }),
        }
        .map_err(at)?;
        identities.push(Identity {
            name: name.to_string(),
            expr,
        });
    }
    let profile = profile.ok_or_else(|| DslError::ProfileMismatch("missing profile header".into()))?;
    Ok(BasisFile {
        profile,
        identities,
    })
}

fn shift(e: DslError, by: usize) -> DslError {
    match e {
        DslError::Parse { pos, msg } => DslError::Parse { pos: pos + by, msg },
        DslError::UnknownFamily { family, pos } => DslError::UnknownFamily {
            family,
            pos: pos + by,
        },
        DslError::NonPositiveExponent { value, pos } => DslError::NonPositiveExponent {
            value,
            pos: pos + by,
        },
        other => other,
    }
}

/// Read a basis file, or a shipped one by bare file name.
pub fn load_basis(path: impl AsRef<Path>, q: u64) -> Result<BasisFile, DslError> {
    let path = path.as_ref();
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => match path.to_str().and_then(shipped_basis) {
            Some(t) => t.to_string(),
            None => {
                return Err(DslError::Io {
                    path: path.display().to_string(),
                    msg: e.to_string(),
                })
            }
        },
    };
    parse_basis(&text, q)
}

/// Basis files compiled into the library.
pub const SHIPPED_BASES: [(&str, &str); 8] = [
    ("beta_z2.lie", include_str!("../../bases/beta_z2.lie")),
    ("beta2_z3.lie", include_str!("../../bases/beta2_z3.lie")),
    ("beta3_z2z2.lie", include_str!("../../bases/beta3_z2z2.lie")),
    ("b2_z2.lie", include_str!("../../bases/b2_z2.lie")),
    ("m1_z3.lie", include_str!("../../bases/m1_z3.lie")),
    ("m2_z3.lie", include_str!("../../bases/m2_z3.lie")),
    ("m_z3.lie", include_str!("../../bases/m_z3.lie")),
    ("n_z2z2.lie", include_str!("../../bases/n_z2z2.lie")),
];

pub fn shipped_basis(name: &str) -> Option<&'static str> {
    SHIPPED_BASES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}
