//! Operations that only make sense in one variable: exact division,
//! symmetrization and comparison up to units `±t^k`.
//!
//! A polynomial over the empty variable set counts as univariate with every
//! term at exponent zero.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{LaurentPoly, Monomial};
use crate::error::{Error, Result};

type Dense = BTreeMap<i64, BigInt>;

impl LaurentPoly {
    fn univariate_terms(&self) -> Result<Dense> {
        match self.vars.len() {
            0 => Ok(self.terms.values().map(|c| (0, c.clone())).collect()),
            1 => Ok(self
                .terms
                .iter()
                .map(|(m, c)| (m.0[0], c.clone()))
                .collect()),
            n => Err(Error::NotUnivariate(n)),
        }
    }

    fn with_univariate_terms(&self, dense: Dense) -> LaurentPoly {
        let arity = self.vars.len();
        let terms = dense
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| {
                let m = if arity == 0 {
                    debug_assert_eq!(e, 0);
                    Monomial(Vec::new())
                } else {
                    Monomial(vec![e])
                };
                (m, c)
            })
            .collect();
        LaurentPoly::from_map(&self.vars, terms)
    }

    /// Lowest exponent, `None` for zero or multivariate input.
    pub fn min_exponent(&self) -> Option<i64> {
        self.univariate_terms().ok()?.keys().next().copied()
    }

    /// Highest exponent, `None` for zero or multivariate input.
    pub fn max_exponent(&self) -> Option<i64> {
        self.univariate_terms().ok()?.keys().next_back().copied()
    }

    /// Difference between the highest and lowest exponent.
    pub fn span(&self) -> Option<i64> {
        let d = self.univariate_terms().ok()?;
        let lo = *d.keys().next()?;
        let hi = *d.keys().next_back()?;
        hi.checked_sub(lo)
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Result<LaurentPoly> {
        let d = self.univariate_terms()?;
        if self.vars.is_empty() && k != 0 {
            return Err(Error::NotUnivariate(0));
        }
        let shifted = d
            .into_iter()
            .map(|(e, c)| Ok((e.checked_add(k).ok_or(Error::ExponentOverflow)?, c)))
            .collect::<Result<Dense>>()?;
        Ok(self.with_univariate_terms(shifted))
    }

    /// Returns `q` with `self = q * den` exactly.
    ///
    /// Fails with [`Error::NotDivisible`] if no such Laurent polynomial with
    /// integer coefficients exists.
    pub fn exact_divide(&self, den: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_same_vars(den)?;
        let mut rem = self.univariate_terms()?;
        let den_terms = den.univariate_terms()?;
        let (&den_hi, den_lc) = den_terms.iter().next_back().ok_or(Error::DivisionByZero)?;
        let den_lo = *den_terms.keys().next().expect("nonzero");
        let Some(&num_lo) = rem.keys().next() else {
            return Ok(LaurentPoly::zero(&self.vars));
        };
        // Any quotient term must sit at or above this exponent.
        let q_lo = num_lo.checked_sub(den_lo).ok_or(Error::ExponentOverflow)?;

        let mut quotient = Dense::new();
        while let Some((&top, top_c)) = rem.iter().next_back() {
            let qe = top.checked_sub(den_hi).ok_or(Error::ExponentOverflow)?;
            if qe < q_lo {
                return Err(Error::NotDivisible);
            }
            let (qc, r) = top_c.div_rem(den_lc);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (&de, dc) in &den_terms {
                let e = de.checked_add(qe).ok_or(Error::ExponentOverflow)?;
                let entry = rem.entry(e).or_default();
                *entry -= &qc * dc;
                if entry.is_zero() {
                    rem.remove(&e);
                }
            }
            quotient.insert(qe, qc);
        }
        Ok(self.with_univariate_terms(quotient))
    }

    /// True when `P(t^-1) = P(t)`.
    pub fn is_symmetric(&self) -> bool {
        match self.univariate_terms() {
            Ok(d) => d
                .iter()
                .all(|(e, c)| e.checked_neg().and_then(|ne| d.get(&ne)) == Some(c)),
            Err(_) => false,
        }
    }

    /// The unit multiple `±t^k · self` that is symmetric under `t -> t^-1`
    /// and has a positive top coefficient.
    pub fn symmetrize(&self) -> Result<LaurentPoly> {
        let d = self.univariate_terms()?;
        let (Some(&lo), Some((&hi, top))) = (d.keys().next(), d.iter().next_back()) else {
            return Err(Error::NotSymmetrizable);
        };
        let span = (hi as i128) - (lo as i128);
        if span % 2 != 0 {
            return Err(Error::NotSymmetrizable);
        }
        let center = ((hi as i128) + (lo as i128)) / 2;
        let negate = top.is_negative();
        let mut out = Dense::new();
        for (e, c) in d.iter() {
            let ne = i64::try_from(*e as i128 - center).map_err(|_| Error::ExponentOverflow)?;
            out.insert(ne, if negate { -c } else { c.clone() });
        }
        let sym = self.with_univariate_terms(out);
        if sym.is_symmetric() {
            Ok(sym)
        } else {
            Err(Error::NotSymmetrizable)
        }
    }

    /// Ordinary-polynomial representative: lowest exponent zero, positive
    /// top coefficient. Zero maps to zero.
    pub fn unit_normalize(&self) -> Result<LaurentPoly> {
        let d = self.univariate_terms()?;
        let Some((&lo, _)) = d.iter().next() else {
            return Ok(self.clone());
        };
        let negate = d.values().next_back().is_some_and(|c| c.is_negative());
        let out = d
            .into_iter()
            .map(|(e, c)| (e - lo, if negate { -c } else { c }))
            .collect();
        Ok(self.with_univariate_terms(out))
    }

    /// True iff `self = ±t^k · other` for some integer `k`.
    ///
    /// Multivariate inputs, or inputs over different variable sets, compare
    /// unequal.
    pub fn equal_up_to_units(&self, other: &LaurentPoly) -> bool {
        if self.vars != other.vars {
            return false;
        }
        match (self.unit_normalize(), other.unit_normalize()) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }

    /// Geometric sum `1 + t + ... + t^(k-1)` in the single variable of `self`.
    pub(crate) fn geometric_sum_like(&self, k: u64) -> Result<LaurentPoly> {
        if self.vars.len() != 1 {
            return Err(Error::NotUnivariate(self.vars.len()));
        }
        let top = i64::try_from(k).map_err(|_| Error::ExponentOverflow)?;
        let d = (0..top).map(|e| (e, BigInt::from(1))).collect();
        Ok(self.with_univariate_terms(d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::VariableSet;

    fn t(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::univariate("t", terms.iter().copied())
    }

    #[test]
    fn divide_exact() {
        assert_eq!(
            t(&[(2, 1), (0, -1)])
                .exact_divide(&t(&[(1, 1), (0, -1)]))
                .unwrap(),
            t(&[(1, 1), (0, 1)])
        );
    }

    #[test]
    fn divide_with_remainder_fails() {
        assert_eq!(
            t(&[(2, 1), (0, 1)]).exact_divide(&t(&[(1, 1), (0, -1)])),
            Err(Error::NotDivisible)
        );
    }

    #[test]
    fn divide_by_zero_fails() {
        let z = LaurentPoly::zero(&VariableSet::single("t"));
        assert_eq!(t(&[(1, 1)]).exact_divide(&z), Err(Error::DivisionByZero));
    }

    #[test]
    fn divide_trefoil_closed_formula() {
        // (t^6 - 1)(t - 1) / ((t^2 - 1)(t^3 - 1))
        let num = t(&[(7, 1), (6, -1), (1, -1), (0, 1)]);
        let den = t(&[(5, 1), (3, -1), (2, -1), (0, 1)]);
        assert_eq!(
            num.exact_divide(&den).unwrap(),
            t(&[(2, 1), (1, -1), (0, 1)])
        );
    }

    #[test]
    fn divide_laurent_inputs() {
        // (t^-2 - 1) / (t^-1 + 1) = t^-1 - 1
        let num = t(&[(-2, 1), (0, -1)]);
        let den = t(&[(-1, 1), (0, 1)]);
        assert_eq!(num.exact_divide(&den).unwrap(), t(&[(-1, 1), (0, -1)]));
    }

    #[test]
    fn divide_needs_integer_quotient() {
        assert_eq!(
            t(&[(1, 1)]).exact_divide(&t(&[(0, 2)])),
            Err(Error::NotDivisible)
        );
        assert_eq!(
            t(&[(1, 4)]).exact_divide(&t(&[(0, -2)])).unwrap(),
            t(&[(1, -2)])
        );
    }

    #[test]
    fn divide_rejects_multivariate() {
        let xy = VariableSet::new(["x", "y"]).unwrap();
        let p = LaurentPoly::one(&xy);
        assert_eq!(p.exact_divide(&p), Err(Error::NotUnivariate(2)));
    }

    #[test]
    fn symmetrize_examples() {
        assert_eq!(
            t(&[(2, 1), (1, -1), (0, 1)]).symmetrize().unwrap(),
            t(&[(1, 1), (0, -1), (-1, 1)])
        );
        assert_eq!(t(&[(0, 1)]).symmetrize().unwrap(), t(&[(0, 1)]));
        assert_eq!(
            t(&[(2, 1), (1, 1)]).symmetrize(),
            Err(Error::NotSymmetrizable)
        );
        // even span but asymmetric coefficients
        assert_eq!(
            t(&[(2, 1), (1, 2), (0, 3)]).symmetrize(),
            Err(Error::NotSymmetrizable)
        );
        // negative top coefficient gets flipped
        assert_eq!(
            t(&[(4, -1), (3, 2), (2, -1)]).symmetrize().unwrap(),
            t(&[(1, 1), (0, -2), (-1, 1)])
        );
    }

    #[test]
    fn symmetrize_zero_fails() {
        assert_eq!(
            LaurentPoly::zero(&VariableSet::single("t")).symmetrize(),
            Err(Error::NotSymmetrizable)
        );
    }

    #[test]
    fn units() {
        let a = t(&[(2, 1), (1, -1), (0, 1)]);
        let b = t(&[(1, 1), (0, -1), (-1, 1)]);
        assert!(a.equal_up_to_units(&b));
        assert!(a.equal_up_to_units(&-&a));
        assert!(!t(&[(1, 1), (0, -1)]).equal_up_to_units(&t(&[(1, 1), (0, 1)])));
        let z = LaurentPoly::zero(a.variables());
        assert!(z.equal_up_to_units(&z));
        assert!(!z.equal_up_to_units(&a));
    }

    #[test]
    fn span_and_extremes() {
        let p = t(&[(3, 1), (-2, 5)]);
        assert_eq!(p.span(), Some(5));
        assert_eq!(p.min_exponent(), Some(-2));
        assert_eq!(p.max_exponent(), Some(3));
        assert_eq!(LaurentPoly::zero(p.variables()).span(), None);
    }
}
