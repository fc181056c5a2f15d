//! Fox free differential calculus on one-relator knot group presentations.
//!
//! For a presentation `<x, y | r>` with abelianization `phi` onto `<t>`, the
//! Alexander matrix is the row `(phi(dr/dx), phi(dr/dy))`. Deleting the
//! column of `y` leaves `phi(dr/dx)`, and
//! `Delta(t) = phi(dr/dx) * (t - 1) / (phi(y) - 1)` up to units.
//!
//! This path shares no code with the torus closed formula beyond the Laurent
//! arithmetic, which makes it usable as an oracle.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use super::{knot_variables, TorusKnotSpec};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    fn inverse_of(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

/// Freely reduced word in the generators and their inverses.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    /// Reduces `letters` freely.
    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last().is_some_and(|&last| last.inverse_of(l)) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Builds a word from `(generator, power)` syllables.
    pub fn from_powers(syllables: &[(usize, i64)]) -> Self {
        Word::new(syllables.iter().flat_map(|&(generator, k)| {
            std::iter::repeat_n(
                Letter {
                    generator,
                    inverse: k < 0,
                },
                k.unsigned_abs() as usize,
            )
        }))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        for r in &relators {
            if let Some(l) = r.0.iter().find(|l| l.generator >= generators.len()) {
                return Err(Error::UnsupportedPresentation(format!(
                    "relator uses generator index {} of {}",
                    l.generator,
                    generators.len()
                )));
            }
        }
        let relators = relators.into_iter().map(|r| Word::new(r.0)).collect();
        Ok(GroupPresentation {
            generators,
            relators,
        })
    }

    /// `<x | >`, the knot group of the unknot.
    pub fn unknot() -> Self {
        GroupPresentation {
            generators: vec!["x".into()],
            relators: Vec::new(),
        }
    }

    /// `<x, y | x^p y^-q>` for `T(p, q)`.
    pub fn torus(k: TorusKnotSpec) -> Result<Self> {
        let p = i64::try_from(k.p()).map_err(|_| Error::ExponentOverflow)?;
        let q = i64::try_from(k.q()).map_err(|_| Error::ExponentOverflow)?;
        Self::new(
            vec!["x".into(), "y".into()],
            vec![Word::from_powers(&[(0, p), (1, -q)])],
        )
    }

    /// Abelianization of the torus-knot presentation: `x -> t^q`, `y -> t^p`.
    pub fn torus_abelianization(k: TorusKnotSpec) -> Result<Vec<i64>> {
        let p = i64::try_from(k.p()).map_err(|_| Error::ExponentOverflow)?;
        let q = i64::try_from(k.q()).map_err(|_| Error::ExponentOverflow)?;
        Ok(vec![q, p])
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} | ", self.generators.join(", "))?;
        for (i, r) in self.relators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            for l in r.letters() {
                f.write_str(&self.generators[l.generator])?;
                if l.inverse {
                    f.write_str("^-1")?;
                }
            }
        }
        f.write_str(">")
    }
}

/// Image of the Fox derivative `d(word)/d(generator)` under the
/// abelianization sending generator `i` to `t^abelianization[i]`.
pub fn fox_derivative(
    word: &Word,
    generator: usize,
    abelianization: &[i64],
) -> Result<LaurentPoly> {
    let vars = knot_variables();
    let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
    let mut prefix = 0i64;
    for l in word.letters() {
        let a = abelianization[l.generator];
        if l.inverse {
            prefix = prefix.checked_sub(a).ok_or(Error::ExponentOverflow)?;
            if l.generator == generator {
                *acc.entry(prefix).or_default() -= 1;
            }
        } else {
            if l.generator == generator {
                *acc.entry(prefix).or_default() += 1;
            }
            prefix = prefix.checked_add(a).ok_or(Error::ExponentOverflow)?;
        }
    }
    LaurentPoly::from_terms(&vars, acc.into_iter().map(|(e, c)| (vec![e], c)))
}

fn generator_minus_one(a: i64) -> LaurentPoly {
    LaurentPoly::from_terms(&knot_variables(), [(vec![a], 1), (vec![0], -1)]).expect("arity one")
}

/// Alexander polynomial of a knot group from a presentation with one
/// generator and no relators, or two generators and one relator.
///
/// `abelianization[i]` is the exponent of `t` that generator `i` maps to.
/// The result is symmetrized when it can be, otherwise unit-normalized.
pub fn alexander_fox_oracle(g: &GroupPresentation, abelianization: &[i64]) -> Result<LaurentPoly> {
    if abelianization.len() != g.generators.len() {
        return Err(Error::UnsupportedPresentation(format!(
            "abelianization has {} images for {} generators",
            abelianization.len(),
            g.generators.len()
        )));
    }
    let vars = knot_variables();
    match (g.generators.len(), g.relators.len()) {
        (1, 0) => {
            if abelianization[0].abs() != 1 {
                return Err(Error::UnsupportedPresentation(
                    "abelianization of a free cyclic group must be onto".into(),
                ));
            }
            Ok(LaurentPoly::one(&vars))
        }
        (2, 1) => two_generator(&g.relators[0], abelianization),
        (n, m) => Err(Error::UnsupportedPresentation(format!(
            "{n} generators and {m} relators"
        ))),
    }
}

fn two_generator(r: &Word, ab: &[i64]) -> Result<LaurentPoly> {
    let exponent_sum: i64 = r
        .letters()
        .iter()
        .map(|l| {
            if l.inverse {
                -ab[l.generator]
            } else {
                ab[l.generator]
            }
        })
        .sum();
    if exponent_sum != 0 {
        return Err(Error::UnsupportedPresentation(
            "abelianization does not kill the relator".into(),
        ));
    }
    if ab[0].gcd(&ab[1]) != 1 {
        return Err(Error::UnsupportedPresentation(
            "abelianization is not onto".into(),
        ));
    }

    let t_minus_one = generator_minus_one(1);
    // Column j deleted leaves the derivative in the other generator; each
    // minor times (t - 1) / (phi(g_j) - 1) is the Alexander polynomial.
    let mut candidates = Vec::new();
    for (kept, deleted) in [(0usize, 1usize), (1, 0)] {
        if ab[deleted] == 0 {
            continue;
        }
        let minor = fox_derivative(r, kept, ab)?;
        let delta = minor
            .mul(&t_minus_one)?
            .exact_divide(&generator_minus_one(ab[deleted]))
            .map_err(|e| Error::Internal(format!("Fox minor not divisible: {e}")))?;
        candidates.push(delta);
    }
    let (first, rest) = candidates
        .split_first()
        .ok_or_else(|| Error::UnsupportedPresentation("trivial abelianization".into()))?;
    if rest.iter().any(|d| !d.equal_up_to_units(first)) {
        return Err(Error::Internal("Fox minors disagree up to units".into()));
    }
    match first.symmetrize() {
        Ok(s) => Ok(s),
        Err(_) => first.unit_normalize(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::alexander_torus;

    #[test]
    fn words_reduce_freely() {
        let w = Word::from_powers(&[(0, 2), (0, -1), (1, 1), (1, -1), (0, -1)]);
        assert!(w.is_empty());
    }

    #[test]
    fn derivative_of_torus_relator() {
        // d/dx (x^2 y^-3) = 1 + x  ->  1 + t^3
        let r = Word::from_powers(&[(0, 2), (1, -3)]);
        let d = fox_derivative(&r, 0, &[3, 2]).unwrap();
        assert_eq!(d, LaurentPoly::univariate("t", [(3, 1), (0, 1)]));
        // d/dy (x^2 y^-3) = -x^2 (y^-1 + y^-2 + y^-3)  ->  -(t^4 + t^2 + 1)
        let d = fox_derivative(&r, 1, &[3, 2]).unwrap();
        assert_eq!(d, LaurentPoly::univariate("t", [(4, -1), (2, -1), (0, -1)]));
    }

    #[test]
    fn unknot_presentation() {
        assert!(alexander_fox_oracle(&GroupPresentation::unknot(), &[1])
            .unwrap()
            .is_one());
    }

    #[test]
    fn trefoil_presentation() {
        let g = GroupPresentation::torus(TorusKnotSpec::trefoil()).unwrap();
        let d = alexander_fox_oracle(&g, &[3, 2]).unwrap();
        assert!(d.equal_up_to_units(&LaurentPoly::univariate("t", [(2, 1), (1, -1), (0, 1)])));
    }

    #[test]
    fn torus_3_4_presentation() {
        let k = TorusKnotSpec::new(3, 4).unwrap();
        let g = GroupPresentation::torus(k).unwrap();
        let d = alexander_fox_oracle(&g, &[4, 3]).unwrap();
        assert!(d.equal_up_to_units(&alexander_torus(k).unwrap()));
    }

    #[test]
    fn rejects_bad_shapes() {
        let g = GroupPresentation::torus(TorusKnotSpec::trefoil()).unwrap();
        assert!(alexander_fox_oracle(&g, &[1, 1]).is_err());
        assert!(alexander_fox_oracle(&g, &[3]).is_err());
        let three =
            GroupPresentation::new(vec!["a".into(), "b".into(), "c".into()], vec![]).unwrap();
        assert!(alexander_fox_oracle(&three, &[1, 1, 1]).is_err());
        assert!(
            GroupPresentation::new(vec!["a".into()], vec![Word::from_powers(&[(3, 1)])]).is_err()
        );
    }

    #[test]
    fn display() {
        let g = GroupPresentation::torus(TorusKnotSpec::trefoil()).unwrap();
        assert_eq!(g.to_string(), "<x, y | xxy^-1y^-1y^-1>");
    }
}
