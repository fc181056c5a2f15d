#![allow(dead_code)]

use knotsurg_core::{LaurentPoly, VariableSet};
use proptest::prelude::*;

/// Dense ascending coefficients `c[0] + c[1] t + ...` multiplied out by
/// schoolbook convolution. Independent of `LaurentPoly::mul`.
pub fn convolve(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Dense ascending coefficients starting at exponent `offset`.
pub fn dense_poly(var: &str, offset: i64, coeffs: &[i64]) -> LaurentPoly {
    LaurentPoly::univariate(
        var,
        coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| (offset + i as i64, c)),
    )
}

/// `(min exponent, dense ascending coefficients)` of a univariate polynomial.
pub fn to_dense(p: &LaurentPoly) -> (i64, Vec<i64>) {
    let Some(lo) = p.min_exponent() else {
        return (0, Vec::new());
    };
    let hi = p.max_exponent().unwrap();
    let mut out = vec![0i64; (hi - lo + 1) as usize];
    for (m, c) in p.terms() {
        let e = m.exponents().first().copied().unwrap_or(0);
        out[(e - lo) as usize] = i64::try_from(c).expect("small coefficient");
    }
    (lo, out)
}

pub fn arb_univariate(var: &'static str, max_terms: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-12i64..=12, -20i64..=20), 0..=max_terms)
        .prop_map(move |terms| LaurentPoly::univariate(var, terms))
}

pub fn arb_nonzero_univariate(
    var: &'static str,
    max_terms: usize,
) -> impl Strategy<Value = LaurentPoly> {
    arb_univariate(var, max_terms).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn xyz() -> VariableSet {
    VariableSet::new(["x", "y", "z"]).unwrap()
}

pub fn arb_multivariate(vars: VariableSet, max_terms: usize) -> impl Strategy<Value = LaurentPoly> {
    let n = vars.len();
    prop::collection::vec(
        (
            prop::collection::vec(-6i64..=6, n),
            -1_000_000i64..=1_000_000,
        ),
        0..=max_terms,
    )
    .prop_map(move |terms| LaurentPoly::from_terms(&vars, terms).unwrap())
}

/// A symmetric Laurent polynomial times a random unit `±t^k`.
pub fn arb_symmetrizable() -> impl Strategy<Value = LaurentPoly> {
    (
        prop::collection::vec(-9i64..=9, 1..=6),
        -10i64..=10,
        any::<bool>(),
    )
        .prop_filter_map("nonzero", |(half, shift, negate)| {
            // coefficients for exponents -k..=k, mirrored around the middle
            let k = half.len() as i64 - 1;
            let mut terms = Vec::new();
            for (i, &c) in half.iter().enumerate() {
                let e = k - i as i64;
                terms.push((e + shift, c));
                if e != 0 {
                    terms.push((-e + shift, c));
                }
            }
            let p = LaurentPoly::univariate("t", terms);
            if p.is_zero() {
                None
            } else if negate {
                Some(-p)
            } else {
                Some(p)
            }
        })
}
