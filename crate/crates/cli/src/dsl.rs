//! Recursive-descent parser for scalar expressions and the element DSL.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := [scalar '*'] gen
//! gen    := name '[' integer ']' | name
//! scalar := rational literal | '(' scalar expression ')'
//! ```
//!
//! Scalar expressions use `+ - * / ^`, parentheses, integer literals and the
//! variable names of the scalar kernel (`s`, `hbar`, `u`, `alpha`, ...).

use std::collections::BTreeMap;
use std::fmt;

use coideal_core::lie::render_terms;
use coideal_core::{named_element, AlgebraId, Error as CoreError, Kind, LieElement, RationalFn, Symbol, Var};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DslError {
    /// `pos` is the 1-based character column.
    Syntax { pos: usize, msg: String },
    UnknownGenerator(String),
    IllegalMode(String),
    Scalar(String),
}

impl fmt::Display for DslError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DslError::Syntax { pos, msg } => write!(f, "syntax error at column {pos}: {msg}"),
            DslError::UnknownGenerator(g) => write!(f, "unknown generator `{g}`"),
            DslError::IllegalMode(m) => write!(f, "illegal mode: {m}"),
            DslError::Scalar(m) => write!(f, "invalid scalar: {m}"),
        }
    }
}

impl std::error::Error for DslError {}

/// A generator reference as written: symbol plus optional `[n]` index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenRef {
    pub symbol: Symbol,
    pub index: Option<i32>,
}

impl fmt::Display for GenRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            Some(i) => write!(f, "{}[{i}]", self.symbol),
            None => write!(f, "{}", self.symbol),
        }
    }
}

/// Parsed element before elaboration: scalar multiples of named generators
/// in input order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementExpr {
    pub terms: Vec<(RationalFn, GenRef)>,
}

impl ElementExpr {
    pub fn render(&self) -> String {
        render_terms(self.terms.iter().map(|(c, g)| (g.to_string(), c)))
    }

    /// The exact element of `algebra` denoted by the expression.
    pub fn elaborate(&self, algebra: AlgebraId) -> Result<LieElement, DslError> {
        let mut acc = LieElement::zero(algebra);
        for (c, g) in &self.terms {
            let x = named_element(g.symbol, g.index, algebra).map_err(|e| match e {
                CoreError::ModeOutOfAlgebra(b, alg) => DslError::IllegalMode(format!("{g} uses {b}, which is not in {alg}")),
                _ => DslError::UnknownGenerator(g.to_string()),
            })?;
            acc = acc.try_add(&x.scale(c)).expect("same algebra");
        }
        Ok(acc)
    }

    pub fn substitute(&self, bindings: &BTreeMap<Var, RationalFn>) -> Result<ElementExpr, DslError> {
        let terms = self
            .terms
            .iter()
            .map(|(c, g)| Ok((c.substitute(bindings).map_err(|e| DslError::Scalar(e.to_string()))?, *g)))
            .collect::<Result<_, DslError>>()?;
        Ok(ElementExpr { terms })
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { chars: src.chars().collect(), pos: 0, src }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, DslError> {
        Err(DslError::Syntax { pos: self.pos + 1, msg: msg.into() })
    }

    fn expect(&mut self, c: char) -> Result<(), DslError> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.err(format!("expected `{c}`, found `{found}`")),
                None => self.err(format!("expected `{c}` at end of input")),
            }
        }
    }

    fn finish(&mut self) -> Result<(), DslError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.err(format!("unexpected `{c}` in `{}`", self.src)),
        }
    }

    fn digits(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn integer(&mut self) -> Result<i64, DslError> {
        let neg = self.eat('-');
        let Some(d) = self.digits() else {
            return self.err("expected an integer");
        };
        let v: i64 = match d.parse() {
            Ok(v) => v,
            Err(_) => return self.err(format!("integer `{d}` is too large")),
        };
        Ok(if neg { -v } else { v })
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_') {
            if self.pos == start && self.chars[self.pos].is_ascii_digit() {
                break;
            }
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn scalar_expr(&mut self) -> Result<RationalFn, DslError> {
        let mut acc = self.scalar_term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.scalar_term()?;
            } else if self.eat('-') {
                acc = &acc - &self.scalar_term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn scalar_term(&mut self) -> Result<RationalFn, DslError> {
        let mut acc = self.scalar_unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.scalar_unary()?;
            } else if self.eat('/') {
                let at = self.pos;
                let d = self.scalar_unary()?;
                acc = acc.checked_div(&d).map_err(|_| DslError::Syntax { pos: at + 1, msg: "division by zero".into() })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn scalar_unary(&mut self) -> Result<RationalFn, DslError> {
        if self.eat('-') {
            Ok(-&self.scalar_unary()?)
        } else {
            self.scalar_power()
        }
    }

    fn scalar_power(&mut self) -> Result<RationalFn, DslError> {
        let base = self.scalar_atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let at = self.pos;
        let e = self.integer()?;
        let e = i32::try_from(e).map_err(|_| DslError::Syntax { pos: at + 1, msg: "exponent out of range".into() })?;
        base.pow(e).map_err(|_| DslError::Syntax { pos: at + 1, msg: "negative power of zero".into() })
    }

    fn scalar_atom(&mut self) -> Result<RationalFn, DslError> {
        if self.eat('(') {
            let v = self.scalar_expr()?;
            self.expect(')')?;
            return Ok(v);
        }
        if let Some(d) = self.digits() {
            return match d.parse::<i64>() {
                Ok(n) => Ok(RationalFn::int(n)),
                Err(_) => self.err(format!("integer `{d}` is too large")),
            };
        }
        let start = self.pos;
        match self.ident() {
            Some(name) => match name.parse::<Var>() {
                Ok(v) => Ok(RationalFn::var(v)),
                Err(_) => Err(DslError::Syntax { pos: start + 1, msg: format!("unknown variable `{name}`") }),
            },
            None => match self.peek() {
                Some(c) => self.err(format!("expected a scalar, found `{c}`")),
                None => self.err("expected a scalar at end of input"),
            },
        }
    }

    /// Rational literal `n` or `n/d` directly in front of `*`.
    fn literal_coefficient(&mut self) -> Result<Option<RationalFn>, DslError> {
        let save = self.pos;
        let Some(n) = self.digits() else {
            return Ok(None);
        };
        let Ok(n) = n.parse::<i64>() else {
            return self.err(format!("integer `{n}` is too large"));
        };
        let mut value = RationalFn::int(n);
        if self.eat('/') {
            let at = self.pos;
            let Some(d) = self.digits() else {
                return self.err("expected a denominator");
            };
            let d: i64 = d.parse().map_err(|_| DslError::Syntax { pos: at + 1, msg: "denominator too large".into() })?;
            if d == 0 {
                return Err(DslError::Syntax { pos: at + 1, msg: "division by zero".into() });
            }
            value = RationalFn::frac(n, d);
        }
        if !self.eat('*') {
            self.pos = save;
            return self.err("a coefficient must be followed by `*`");
        }
        Ok(Some(value))
    }

    fn term(&mut self) -> Result<(RationalFn, GenRef), DslError> {
        let coeff = if self.peek() == Some('(') {
            self.pos += 1;
            let v = self.scalar_expr()?;
            self.expect(')')?;
            self.expect('*')?;
            v
        } else {
            self.literal_coefficient()?.unwrap_or_else(RationalFn::one)
        };
        Ok((coeff, self.generator()?))
    }

    fn kind(&mut self) -> Result<Kind, DslError> {
        self.expect('(')?;
        let k = match self.ident().as_deref() {
            Some("e") => Kind::E,
            Some("f") => Kind::F,
            Some("h") => Kind::H,
            _ => return self.err("expected one of `e`, `f`, `h`"),
        };
        self.expect(')')?;
        Ok(k)
    }

    fn generator(&mut self) -> Result<GenRef, DslError> {
        let start = self.pos;
        let Some(mut name) = self.ident() else {
            return match self.peek() {
                Some(c) => self.err(format!("expected a generator, found `{c}`")),
                None => self.err("expected a generator at end of input"),
            };
        };
        if name == "X" {
            // X+0, X-1: the sign and digit belong to the name.
            match (self.chars.get(self.pos), self.chars.get(self.pos + 1)) {
                (Some(&s @ ('+' | '-')), Some(&d @ ('0' | '1'))) => {
                    name.push(s);
                    name.push(d);
                    self.pos += 2;
                }
                _ => return self.err("expected `X+0`, `X+1`, `X-0` or `X-1`"),
            }
        }
        let symbol = match name.as_str() {
            "J" => Symbol::J(self.kind()?),
            "Kop" => Symbol::Kop(self.kind()?),
            _ => Symbol::from_name(&name).ok_or_else(|| DslError::UnknownGenerator(name.clone()))?,
        };
        let index = if self.eat('[') {
            let at = self.pos;
            let i = self.integer()?;
            self.expect(']')?;
            let i = i32::try_from(i).map_err(|_| DslError::Syntax { pos: at + 1, msg: "mode out of range".into() })?;
            if !symbol.takes_index() {
                return Err(DslError::Syntax { pos: start + 1, msg: format!("`{name}` takes no index") });
            }
            Some(i)
        } else {
            if symbol.requires_index() {
                return Err(DslError::Syntax { pos: self.pos + 1, msg: format!("`{name}` needs an index") });
            }
            None
        };
        Ok(GenRef { symbol, index })
    }

    fn element(&mut self) -> Result<ElementExpr, DslError> {
        if self.src.trim() == "0" {
            return Ok(ElementExpr { terms: Vec::new() });
        }
        let mut terms = Vec::new();
        let mut negate = self.eat('-');
        loop {
            let (c, g) = self.term()?;
            terms.push((if negate { -&c } else { c }, g));
            if self.eat('+') {
                negate = false;
            } else if self.eat('-') {
                negate = true;
            } else {
                break;
            }
        }
        self.finish()?;
        Ok(ElementExpr { terms })
    }
}

/// Parses a scalar expression such as `s^-2`, `(hbar + 1)/2` or `3`.
pub fn parse_scalar(text: &str) -> Result<RationalFn, DslError> {
    let mut p = Parser::new(text);
    let v = p.scalar_expr()?;
    p.finish()?;
    Ok(v)
}

/// Parses an element expression without elaborating it.
pub fn parse_expr(text: &str) -> Result<ElementExpr, DslError> {
    Parser::new(text).element()
}

/// Parses a single generator name such as `X+0`, `J(e)` or `A[1]`.
pub fn parse_generator(text: &str) -> Result<GenRef, DslError> {
    let mut p = Parser::new(text);
    let g = p.generator()?;
    p.finish()?;
    Ok(g)
}

pub fn parse_element(text: &str, algebra: AlgebraId) -> Result<LieElement, DslError> {
    parse_expr(text)?.elaborate(algebra)
}

/// `VAR=EXPR`.
pub fn parse_binding(text: &str) -> Result<(Var, RationalFn), DslError> {
    let Some((name, value)) = text.split_once('=') else {
        return Err(DslError::Syntax { pos: 1, msg: format!("binding `{text}` is not of the form VAR=EXPR") });
    };
    let var = name
        .trim()
        .parse::<Var>()
        .map_err(|_| DslError::Syntax { pos: 1, msg: format!("unknown variable `{}`", name.trim()) })?;
    let value = parse_scalar(value).map_err(|e| match e {
        DslError::Syntax { pos, msg } => DslError::Syntax { pos: pos + name.chars().count() + 1, msg },
        other => other,
    })?;
    Ok((var, value))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalars() {
        let s = RationalFn::var(Var::S);
        assert_eq!(parse_scalar("s^-2").unwrap(), s.pow(-2).unwrap());
        assert_eq!(parse_scalar("(hbar + 1)/2").unwrap(), &(&RationalFn::var(Var::Hbar) + &RationalFn::one()) * &RationalFn::frac(1, 2));
        assert_eq!(parse_scalar("-3*-u").unwrap(), &RationalFn::int(3) * &RationalFn::var(Var::U));
        assert!(matches!(parse_scalar("1/0"), Err(DslError::Syntax { pos: 3, .. })));
    }

    #[test]
    fn positions() {
        match parse_expr("2*e[1] + ") {
            Err(DslError::Syntax { pos, .. }) => assert_eq!(pos, 10),
            other => panic!("{other:?}"),
        }
        match parse_expr("e[1) ") {
            Err(DslError::Syntax { pos, msg }) => {
                assert_eq!(pos, 4);
                assert!(msg.contains("`]`"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn generators() {
        assert_eq!(parse_generator("X+0").unwrap().symbol, Symbol::Xp0);
        assert_eq!(parse_generator("J(f)").unwrap().symbol, Symbol::J(Kind::F));
        assert_eq!(parse_generator("Bbar[0]").unwrap().index, Some(0));
        assert!(matches!(parse_generator("X+2"), Err(DslError::Syntax { .. })));
        assert!(matches!(parse_generator("Q"), Err(DslError::UnknownGenerator(_))));
    }
}
