use std::fmt;
use std::str::FromStr;

use super::TorusKnotSpec;
use crate::error::{Error, Result};

/// Knot built from torus knots by mirroring and connected sum.
///
/// Text form: `unknot`, `torus(p,q)`, `mirror(E)`, `sum(E,E)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum KnotExpr {
    Unknot,
    Torus(TorusKnotSpec),
    Mirror(Box<KnotExpr>),
    ConnectedSum(Box<KnotExpr>, Box<KnotExpr>),
}

impl KnotExpr {
    pub fn mirror(k: KnotExpr) -> Self {
        KnotExpr::Mirror(Box::new(k))
    }

    pub fn sum(a: KnotExpr, b: KnotExpr) -> Self {
        KnotExpr::ConnectedSum(Box::new(a), Box::new(b))
    }

    /// The left-handed trefoil, `mirror(torus(2,3))`.
    pub fn left_trefoil() -> Self {
        KnotExpr::mirror(KnotExpr::Torus(TorusKnotSpec::trefoil()))
    }
}

impl fmt::Display for KnotExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotExpr::Unknot => f.write_str("unknot"),
            KnotExpr::Torus(k) => write!(f, "{k}"),
            KnotExpr::Mirror(k) => write!(f, "mirror({k})"),
            KnotExpr::ConnectedSum(a, b) => write!(f, "sum({a},{b})"),
        }
    }
}

impl FromStr for KnotExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = ExprParser { src: s, pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != s.len() {
            return p.err("unexpected trailing input");
        }
        Ok(e)
    }
}

struct ExprParser<'a> {
    src: &'a str,
    pos: usize,
}

impl ExprParser<'_> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            self.err(&format!("expected `{c}`"))
        }
    }

    fn word(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..]
            .find(|c: char| !c.is_ascii_alphanumeric())
            .unwrap_or(self.src.len() - start);
        self.pos += len;
        &self.src[start..self.pos]
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        let w = self.word().to_string();
        w.parse().or_else(|_| {
            self.pos = start;
            self.err("expected a positive integer")
        })
    }

    fn expr(&mut self) -> Result<KnotExpr> {
        let start = self.pos;
        match self.word() {
            "unknot" => Ok(KnotExpr::Unknot),
            "torus" => {
                self.expect('(')?;
                let p = self.number()?;
                self.expect(',')?;
                let q = self.number()?;
                self.expect(')')?;
                Ok(KnotExpr::Torus(TorusKnotSpec::new(p, q)?))
            }
            "mirror" => {
                self.expect('(')?;
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(KnotExpr::mirror(inner))
            }
            "sum" => {
                self.expect('(')?;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(')')?;
                Ok(KnotExpr::sum(a, b))
            }
            _ => {
                self.pos = start;
                self.err("expected `unknot`, `torus`, `mirror` or `sum`")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        for s in [
            "unknot",
            "torus(2,3)",
            "mirror(torus(2,3))",
            "sum(torus(2,3),sum(mirror(torus(3,4)),unknot))",
        ] {
            let e: KnotExpr = s.parse().unwrap();
            assert_eq!(e.to_string(), s);
        }
    }

    #[test]
    fn parse_tolerates_whitespace_and_normalizes() {
        let e: KnotExpr = " sum( torus(3, 2) , unknot ) ".parse().unwrap();
        assert_eq!(e.to_string(), "sum(torus(2,3),unknot)");
    }

    #[test]
    fn parse_errors() {
        for bad in [
            "",
            "trefoil",
            "torus(2,4)",
            "torus(2)",
            "sum(unknot)",
            "unknot x",
            "torus(-2,3)",
        ] {
            assert!(bad.parse::<KnotExpr>().is_err(), "{bad}");
        }
    }
}
