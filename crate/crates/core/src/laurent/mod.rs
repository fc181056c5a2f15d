//! Sparse Laurent polynomials in finitely many named variables with
//! arbitrary-precision integer coefficients.
//!
//! A [`LaurentPoly`] is always kept in canonical form: no stored coefficient
//! is zero, so structural equality of two values over the same
//! [`VariableSet`] is polynomial equality. Terms live in a `BTreeMap` keyed by
//! exponent vector, which fixes a lexicographic order for every serialized
//! form.
//!
//! All values are immutable after construction and every operation returns a
//! fresh value, so they can be shared freely between threads.

#![allow(clippy::should_implement_trait)]

mod json;
mod text;
mod univariate;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use json::PolyJson;

/// Ordered list of distinct variable names.
///
/// The order is fixed at construction and decides both the slot layout of
/// exponent vectors and the order variables are printed inside a term.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VariableSet(Arc<[String]>);

impl VariableSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidVariables(format!(
                    "`{name}` is not an identifier"
                )));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidVariables(format!("`{name}` is repeated")));
            }
        }
        Ok(VariableSet(names.into()))
    }

    /// The set with no variables; polynomials over it are integers.
    pub fn empty() -> Self {
        VariableSet(Arc::from(Vec::<String>::new()))
    }

    /// A one-variable set. Panics if `name` is not an identifier.
    pub fn single(name: &str) -> Self {
        Self::new([name]).expect("invalid variable name")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// The same set with slot `idx` removed.
    pub fn without(&self, idx: usize) -> Self {
        let names: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != idx)
            .map(|(_, n)| n.clone())
            .collect();
        VariableSet(names.into())
    }
}

impl fmt::Debug for VariableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for VariableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.join(", "))
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Exponent vector, one slot per variable of the owning [`VariableSet`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<i64>);

impl Monomial {
    pub fn new(exponents: Vec<i64>) -> Self {
        Monomial(exponents)
    }

    /// The monomial `1` in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    pub fn checked_pow(&self, k: i64) -> Result<Monomial> {
        self.0
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    pub fn checked_inverse(&self) -> Result<Monomial> {
        self.checked_pow(-1)
    }

    fn without(&self, idx: usize) -> Monomial {
        let mut e = self.0.clone();
        e.remove(idx);
        Monomial(e)
    }
}

/// Laurent polynomial over `Z` in the variables of a [`VariableSet`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    vars: VariableSet,
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero(vars: &VariableSet) -> Self {
        LaurentPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &VariableSet) -> Self {
        Self::constant(vars, BigInt::one())
    }

    pub fn constant(vars: &VariableSet, c: impl Into<BigInt>) -> Self {
        Self::term(vars, Monomial::one(vars.len()), c)
    }

    /// `c * m`. Panics if `m` has the wrong number of slots.
    pub fn term(vars: &VariableSet, m: Monomial, c: impl Into<BigInt>) -> Self {
        assert_eq!(
            m.len(),
            vars.len(),
            "monomial arity does not match variables"
        );
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly {
            vars: vars.clone(),
            terms,
        }
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(vars: &VariableSet, name: &str) -> Result<Self> {
        let idx = vars
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        Ok(Self::term(vars, Monomial(e), 1))
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging
    /// repeated monomials and dropping zeros.
    pub fn from_terms<I, C>(vars: &VariableSet, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i64>, C)>,
        C: Into<BigInt>,
    {
        let mut out = BTreeMap::new();
        for (exps, c) in terms {
            if exps.len() != vars.len() {
                return Err(Error::InvalidParameter(format!(
                    "exponent vector of length {} for {} variables",
                    exps.len(),
                    vars.len()
                )));
            }
            accumulate(&mut out, Monomial(exps), c.into());
        }
        Ok(LaurentPoly {
            vars: vars.clone(),
            terms: out,
        })
    }

    /// Single-variable shorthand: `univariate("t", [(1, 1), (0, -1), (-1, 1)])`
    /// is `t - 1 + t^-1`.
    pub fn univariate<I, C>(name: &str, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let vars = VariableSet::single(name);
        Self::from_terms(&vars, terms.into_iter().map(|(e, c)| (vec![e], c)))
            .expect("arity is always one")
    }

    pub(crate) fn from_map(vars: &VariableSet, terms: BTreeMap<Monomial, BigInt>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        LaurentPoly {
            vars: vars.clone(),
            terms,
        }
    }

    pub fn variables(&self) -> &VariableSet {
        &self.vars
    }

    /// Terms in ascending lexicographic exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    fn check_same_vars(&self, other: &LaurentPoly) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VariableMismatch {
                left: self.vars.to_string(),
                right: other.vars.to_string(),
            })
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_same_vars(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m.clone(), c.clone());
        }
        Ok(Self::from_map(&self.vars, terms))
    }

    pub fn sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.add(&-other)
    }

    pub fn mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_same_vars(other)?;
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                accumulate(&mut terms, ma.checked_mul(mb)?, ca * cb);
            }
        }
        Ok(Self::from_map(&self.vars, terms))
    }

    /// Multiplies every term by `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &BigInt) -> Result<LaurentPoly> {
        if c.is_zero() {
            return Ok(Self::zero(&self.vars));
        }
        let terms = self
            .terms
            .iter()
            .map(|(mm, cc)| Ok((mm.checked_mul(m)?, cc * c)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(Self::from_map(&self.vars, terms))
    }

    /// `self^k`, with `self^0 = 1`.
    pub fn pow(&self, k: u32) -> Result<LaurentPoly> {
        let mut result = Self::one(&self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Replaces every variable by a monomial over `target` and extends
    /// multiplicatively.
    pub fn substitute(
        &self,
        target: &VariableSet,
        images: &[(&str, Monomial)],
    ) -> Result<LaurentPoly> {
        let mut slots = Vec::with_capacity(self.vars.len());
        for name in self.vars.names() {
            let (_, m) = images
                .iter()
                .find(|(n, _)| n == name)
                .ok_or_else(|| Error::UnmappedVariable(name.clone()))?;
            if m.len() != target.len() {
                return Err(Error::InvalidParameter(format!(
                    "image of `{name}` has {} slots, target has {} variables",
                    m.len(),
                    target.len()
                )));
            }
            slots.push(m);
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut image = Monomial::one(target.len());
            for (e, slot) in m.0.iter().zip(&slots) {
                image = image.checked_mul(&slot.checked_pow(*e)?)?;
            }
            accumulate(&mut terms, image, c.clone());
        }
        Ok(Self::from_map(target, terms))
    }

    /// Sets `name = 1`; the result lives over the set with `name` removed.
    pub fn evaluate_at_one(&self, name: &str) -> Result<LaurentPoly> {
        let idx = self
            .vars
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let vars = self.vars.without(idx);
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            accumulate(&mut terms, m.without(idx), c.clone());
        }
        Ok(Self::from_map(&vars, terms))
    }

    /// Negates every exponent, i.e. `P(t^-1)` in each variable.
    pub fn invert_variables(&self) -> LaurentPoly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (Monomial(m.0.iter().map(|e| -e).collect()), c.clone()))
            .collect();
        Self::from_map(&self.vars, terms)
    }

    /// Largest absolute coefficient, zero for the zero polynomial.
    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }
}

impl std::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        LaurentPoly::from_map(&self.vars, terms)
    }
}

impl std::ops::Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{:?}]({})", self.vars, self)
    }
}

fn accumulate(terms: &mut BTreeMap<Monomial, BigInt>, m: Monomial, c: BigInt) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(m) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}
