use super::{macros, DslError, MacroName};
use crate::freelie::{Expr, GradedVar, GradingProfile};

/// One summand of an operator polynomial `Σ cᵢ aᵢ^kᵢ` occurring in a slot.
#[derive(Debug, Clone)]
struct Term {
    coef: i64,
    base: Expr,
    exp: u64,
    pos: usize,
}

enum Factor {
    Element(Expr),
    /// A parenthesized polynomial with at least one power in it.
    Group(Vec<Term>),
}

pub(super) struct Parser<'a> {
    src: &'a str,
    pos: usize,
    profile: &'a GradingProfile,
    q: u64,
}

impl<'a> Parser<'a> {
    pub(super) fn new(src: &'a str, profile: &'a GradingProfile, q: u64) -> Self {
        Parser {
            src,
            pos: 0,
            profile,
            q,
        }
    }

    fn err(&self, pos: usize, msg: impl Into<String>) -> DslError {
        DslError::Parse {
            pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), DslError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{c}`")))
        }
    }

    fn unexpected(&mut self, wanted: &str) -> DslError {
        match self.peek() {
            None => self.err(self.pos, format!("expected {wanted}, found end of input")),
            Some(c) => self.err(self.pos, format!("expected {wanted}, found `{c}`")),
        }
    }

    pub(super) fn finish(&mut self) -> Result<(), DslError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.unexpected("end of input")),
        }
    }

    fn integer(&mut self) -> Result<i128, DslError> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.src[start..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if digits == 0 {
            return Err(self.unexpected("a number"));
        }
        self.pos += digits;
        self.src[start..self.pos]
            .parse()
            .map_err(|_| self.err(start, "number too large"))
    }

    fn ident(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        let n = self.src[start..]
            .bytes()
            .take_while(u8::is_ascii_alphanumeric)
            .count();
        self.pos += n;
        &self.src[start..self.pos]
    }

    /// A full expression: a linear combination of elements.
    pub(super) fn element(&mut self) -> Result<Expr, DslError> {
        let terms = self.poly()?;
        to_element(terms)
    }

    fn poly(&mut self) -> Result<Vec<Term>, DslError> {
        let mut terms = Vec::new();
        let mut sign = 1;
        if self.eat('-') {
            sign = -1;
        }
        loop {
            self.signed_term(sign, &mut terms)?;
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else {
                return Ok(terms);
            }
        }
    }

    fn signed_term(&mut self, sign: i64, out: &mut Vec<Term>) -> Result<(), DslError> {
        let pos = {
            self.skip_ws();
            self.pos
        };
        let mut coef = sign;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let save = self.pos;
            let n = self.integer()?;
            if self.eat('*') {
                coef = i64::try_from(n)
                    .ok()
                    .and_then(|n| n.checked_mul(sign))
                    .ok_or_else(|| self.err(save, "coefficient too large"))?;
            } else if n == 0 {
                out.push(Term {
                    coef: sign,
                    base: Expr::zero(),
                    exp: 1,
                    pos,
                });
                return Ok(());
            } else {
                return Err(self.err(save, "a nonzero scalar needs `*` and a Lie factor"));
            }
        }
        match self.factor()? {
            Factor::Element(base) => {
                let exp = if self.eat('^') { self.exponent()? } else { 1 };
                out.push(Term {
                    coef,
                    base,
                    exp,
                    pos,
                });
            }
            Factor::Group(terms) => {
                if self.peek() == Some('^') {
                    return Err(self.err(self.pos, "only an element can be raised to a power"));
                }
                out.extend(terms.into_iter().map(|t| Term {
                    coef: t.coef * coef,
                    ..t
                }));
            }
        }
        Ok(())
    }

    fn factor(&mut self) -> Result<Factor, DslError> {
        match self.peek() {
            Some('[') => {
                self.pos += 1;
                self.bracket().map(Factor::Element)
            }
            Some('(') => {
                self.pos += 1;
                let terms = self.poly()?;
                self.expect(')')?;
                if terms.iter().all(|t| t.exp == 1) {
                    Ok(Factor::Element(to_element(terms)?))
                } else {
                    Ok(Factor::Group(terms))
                }
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let name = self.ident();
                if let Some(m) = MacroName::from_ident(name) {
                    self.expect('(')?;
                    let u = self.element()?;
                    self.expect(',')?;
                    let v = self.element()?;
                    self.expect(')')?;
                    return Ok(Factor::Element(macros::expand_macro(m, u, v, self.q)));
                }
                self.variable(name, start).map(Factor::Element)
            }
            _ => Err(self.unexpected("a variable, `[` or `(`")),
        }
    }

    fn variable(&self, name: &str, start: usize) -> Result<Expr, DslError> {
        let v: GradedVar = name
            .parse()
            .map_err(|_| self.err(start, format!("`{name}` is not a variable")))?;
        if !self.profile.has_family(v.family) {
            return Err(DslError::UnknownFamily {
                family: v.family,
                pos: start,
            });
        }
        Ok(Expr::Var(v))
    }

    /// After `[`: slots separated by commas, at least two.
    fn bracket(&mut self) -> Result<Expr, DslError> {
        let open = self.pos - 1;
        let first = self.poly()?;
        if !self.eat(',') {
            return Err(if self.peek().is_none() {
                self.unexpected("`,`")
            } else {
                self.err(open, "a bracket needs at least two slots")
            });
        }
        let second = self.poly()?;
        let mut acc = if first.iter().all(|t| t.exp == 1) {
            apply(to_element(first)?, second)?
        } else {
            // [P, s] with P an operator polynomial: −s·P(ad)
            let s = to_element(second)?;
            Expr::neg(apply(s, first)?)
        };
        while self.eat(',') {
            let slot = self.poly()?;
            acc = apply(acc, slot)?;
        }
        self.expect(']')?;
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<u64, DslError> {
        self.skip_ws();
        let pos = self.pos;
        let value = self.exp_power()?;
        if value < 1 {
            return Err(DslError::NonPositiveExponent { value, pos });
        }
        u64::try_from(value).map_err(|_| self.err(pos, "exponent too large"))
    }

    fn exp_atom(&mut self) -> Result<i128, DslError> {
        match self.peek() {
            Some('q') => {
                self.pos += 1;
                Ok(self.q as i128)
            }
            Some('(') => {
                self.pos += 1;
                let v = self.exp_sum()?;
                self.expect(')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => self.integer(),
            _ => Err(self.unexpected("an exponent")),
        }
    }

    fn exp_power(&mut self) -> Result<i128, DslError> {
        let pos = self.pos;
        let base = self.exp_atom()?;
        if self.eat('^') {
            let e = self.exp_power()?;
            let e = u32::try_from(e).map_err(|_| self.err(pos, "bad exponent"))?;
            base.checked_pow(e).ok_or_else(|| self.err(pos, "exponent too large"))
        } else {
            Ok(base)
        }
    }

    fn exp_product(&mut self) -> Result<i128, DslError> {
        let pos = self.pos;
        let mut v = self.exp_power()?;
        while self.eat('*') {
            v = v
                .checked_mul(self.exp_power()?)
                .ok_or_else(|| self.err(pos, "exponent too large"))?;
        }
        Ok(v)
    }

    fn exp_sum(&mut self) -> Result<i128, DslError> {
        let mut v = self.exp_product()?;
        loop {
            if self.eat('+') {
                v += self.exp_product()?;
            } else if self.eat('-') {
                v -= self.exp_product()?;
            } else {
                return Ok(v);
            }
        }
    }
}

fn to_element(terms: Vec<Term>) -> Result<Expr, DslError> {
    if let Some(t) = terms.iter().find(|t| t.exp != 1) {
        return Err(DslError::Parse {
            pos: t.pos,
            msg: "a power is only allowed inside a bracket slot".into(),
        });
    }
    let items: Vec<Expr> = terms.into_iter().map(|t| Expr::scaled(t.coef, t.base)).collect();
    Ok(Expr::sum(items))
}

/// `[acc, slot]`, where a slot with powers acts as an operator polynomial.
fn apply(acc: Expr, slot: Vec<Term>) -> Result<Expr, DslError> {
    if slot.iter().all(|t| t.exp == 1) {
        return Ok(Expr::bracket(acc, to_element(slot)?));
    }
    let items = slot
        .into_iter()
        .map(|t| Expr::scaled(t.coef, Expr::ad_pow(acc.clone(), t.base, t.exp)))
        .collect();
    Ok(Expr::sum(items))
}
