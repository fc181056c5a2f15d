//! Alexander polynomials of torus knots and connected sums of them.
//!
//! Torus knots go through the closed formula
//! `(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1))`, evaluated with exact division
//! on ordinary polynomials and symmetrized at the end. The [`fox`] module
//! recomputes the same polynomial from the knot group as a cross-check.

mod expr;
pub mod fox;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, VariableSet};

pub use expr::KnotExpr;

/// Name of the variable every knot polynomial is expressed in.
pub const KNOT_VARIABLE: &str = "t";

pub fn knot_variables() -> VariableSet {
    VariableSet::single(KNOT_VARIABLE)
}

/// Torus knot `T(p, q)` with `gcd(p, q) = 1`, stored with `p <= q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusKnotSpec {
    p: u64,
    q: u64,
}

impl TorusKnotSpec {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidTorusKnot {
                p,
                q,
                reason: "parameters must be positive",
            });
        }
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidTorusKnot {
                p,
                q,
                reason: "parameters must be coprime",
            });
        }
        Ok(TorusKnotSpec {
            p: p.min(q),
            q: p.max(q),
        })
    }

    /// The right-handed trefoil `T(2, 3)`.
    pub fn trefoil() -> Self {
        TorusKnotSpec { p: 2, q: 3 }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn is_unknot(&self) -> bool {
        self.p == 1
    }
}

impl std::fmt::Display for TorusKnotSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "torus({},{})", self.p, self.q)
    }
}

fn exponent(v: u64) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::ExponentOverflow)
}

/// `t^e - 1`.
fn power_minus_one(vars: &VariableSet, e: i64) -> LaurentPoly {
    LaurentPoly::from_terms(vars, [(vec![e], 1), (vec![0], -1)]).expect("arity one")
}

/// Unsymmetrized Alexander polynomial of `T(p, q)`: an ordinary polynomial
/// with constant term `1` and degree `(p - 1)(q - 1)`.
pub fn alexander_torus_polynomial(k: TorusKnotSpec) -> Result<LaurentPoly> {
    let vars = knot_variables();
    let p = exponent(k.p)?;
    let q = exponent(k.q)?;
    let pq = p.checked_mul(q).ok_or(Error::ExponentOverflow)?;
    let num = power_minus_one(&vars, pq).mul(&power_minus_one(&vars, 1))?;
    let den = power_minus_one(&vars, p).mul(&power_minus_one(&vars, q))?;
    match num.exact_divide(&den) {
        Ok(d) => Ok(d),
        Err(Error::NotDivisible) => Err(Error::Internal(format!(
            "closed formula for {k} left a remainder"
        ))),
        Err(e) => Err(e),
    }
}

/// Symmetrized Alexander polynomial of `T(p, q)` in `t`.
pub fn alexander_torus(k: TorusKnotSpec) -> Result<LaurentPoly> {
    let raw = alexander_torus_polynomial(k)?;
    let expected_span = exponent((k.p - 1) * (k.q - 1))?;
    if raw.span() != Some(expected_span) {
        return Err(Error::Internal(format!(
            "Alexander polynomial of {k} has span {:?}, expected {expected_span}",
            raw.span()
        )));
    }
    raw.symmetrize()
        .map_err(|e| Error::Internal(format!("Alexander polynomial of {k}: {e}")))
}

/// Genus of the fiber surface of `T(p, q)`: `(p - 1)(q - 1) / 2`.
pub fn genus_torus(k: TorusKnotSpec) -> u64 {
    (k.p - 1) * (k.q - 1) / 2
}

/// Alexander polynomial of a knot expression, symmetrized.
///
/// Mirror images have the same polynomial, and connected sums multiply.
pub fn alexander_expr(k: &KnotExpr) -> Result<LaurentPoly> {
    match k {
        KnotExpr::Unknot => Ok(LaurentPoly::one(&knot_variables())),
        KnotExpr::Torus(spec) => alexander_torus(*spec),
        KnotExpr::Mirror(inner) => alexander_expr(inner),
        KnotExpr::ConnectedSum(a, b) => {
            let product = alexander_expr(a)?.mul(&alexander_expr(b)?)?;
            product
                .symmetrize()
                .map_err(|e| Error::Internal(format!("connected sum {k}: {e}")))
        }
    }
}
