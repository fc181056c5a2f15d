//! Text form: `coeff*var^exp` terms joined by `+`/`-`, for example
//! `t_K^2*t_G^-1 - 3`.
//!
//! Terms are printed in descending lexicographic exponent order and the
//! variables inside a term follow the order of the [`VariableSet`]. A unit
//! coefficient and an exponent of one are omitted.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{LaurentPoly, VariableSet};
use crate::error::{Error, Result};

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut wrote = false;
            if !abs.is_one() || m.is_one() {
                write!(f, "{abs}")?;
                wrote = true;
            }
            for (name, &e) in self.vars.names().iter().zip(m.exponents()) {
                if e == 0 {
                    continue;
                }
                if wrote {
                    f.write_str("*")?;
                }
                f.write_str(name)?;
                if e != 1 {
                    write!(f, "^{e}")?;
                }
                wrote = true;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses with variables inferred in order of first appearance.
    fn from_str(s: &str) -> Result<Self> {
        LaurentPoly::parse_inferred(s)
    }
}

type RawTerm = (Vec<(String, i64)>, BigInt);

impl LaurentPoly {
    /// Parses `s` over a fixed variable set; any other name is an error.
    pub fn parse(s: &str, vars: &VariableSet) -> Result<LaurentPoly> {
        let raw = Parser::new(s).poly()?;
        build(vars, raw)
    }

    /// Parses `s`, taking the variables in order of first appearance.
    pub fn parse_inferred(s: &str) -> Result<LaurentPoly> {
        let raw = Parser::new(s).poly()?;
        let mut names: Vec<String> = Vec::new();
        for (factors, _) in &raw {
            for (name, _) in factors {
                if !names.contains(name) {
                    names.push(name.clone());
                }
            }
        }
        let vars = VariableSet::new(names)?;
        build(&vars, raw)
    }
}

fn build(vars: &VariableSet, raw: Vec<RawTerm>) -> Result<LaurentPoly> {
    let mut terms = Vec::with_capacity(raw.len());
    for (factors, c) in raw {
        let mut exps = vec![0i64; vars.len()];
        for (name, e) in factors {
            let idx = vars
                .index_of(&name)
                .ok_or_else(|| Error::UnknownVariable(name.clone()))?;
            exps[idx] = exps[idx].checked_add(e).ok_or(Error::ExponentOverflow)?;
        }
        terms.push((exps, c));
    }
    LaurentPoly::from_terms(vars, terms)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn poly(mut self) -> Result<Vec<RawTerm>> {
        let mut terms = Vec::new();
        let mut negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let (factors, mut c) = self.term()?;
            if negative {
                c = -c;
            }
            terms.push((factors, c));
            if self.eat('+') {
                negative = false;
            } else if self.eat('-') {
                negative = true;
            } else {
                break;
            }
        }
        self.skip_ws();
        if self.pos != self.src.len() {
            return self.err("unexpected trailing input");
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<RawTerm> {
        let mut factors = Vec::new();
        let mut coeff = BigInt::one();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => coeff *= self.integer()?,
                Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                    let name = self.ident();
                    let exp = if self.eat('^') { self.exponent()? } else { 1 };
                    factors.push((name, exp));
                }
                Some(c) => return self.err(format!("unexpected `{c}`")),
                None => return self.err("unexpected end of input"),
            }
            if !self.eat('*') {
                return Ok((factors, coeff));
            }
        }
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            self.pos += 1;
        }
        self.src[start..self.pos].to_string()
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(&self.src[start..self.pos])
    }

    fn integer(&mut self) -> Result<BigInt> {
        let d = self.digits()?;
        Ok(d.parse().expect("ascii digits"))
    }

    fn exponent(&mut self) -> Result<i64> {
        let paren = self.eat('(');
        let negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let start = self.pos;
        let d = self.digits()?;
        let value: i64 = match d.parse::<i64>() {
            Ok(v) => v,
            Err(_) => {
                self.pos = start;
                return self.err("exponent out of range");
            }
        };
        if paren && !self.eat(')') {
            return self.err("expected `)`");
        }
        Ok(if negative { -value } else { value })
    }
}
