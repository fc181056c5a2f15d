use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{LaurentPoly, VariableSet};
use crate::error::Error;

/// Wire form of a [`LaurentPoly`]. Coefficients travel as decimal strings so
/// no precision is lost; terms are listed in descending lexicographic
/// exponent order, matching the text form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyJson {
    pub variables: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub exps: Vec<i64>,
    pub coeff: String,
}

impl From<&LaurentPoly> for PolyJson {
    fn from(p: &LaurentPoly) -> Self {
        PolyJson {
            variables: p.vars.names().to_vec(),
            terms: p
                .terms
                .iter()
                .rev()
                .map(|(m, c)| TermJson {
                    exps: m.exponents().to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}

impl From<LaurentPoly> for PolyJson {
    fn from(p: LaurentPoly) -> Self {
        PolyJson::from(&p)
    }
}

impl TryFrom<PolyJson> for LaurentPoly {
    type Error = Error;

    fn try_from(j: PolyJson) -> Result<Self, Error> {
        let vars = VariableSet::new(j.variables)?;
        let terms =
            j.terms
                .into_iter()
                .map(|t| {
                    let c: BigInt = t.coeff.parse().map_err(|_| {
                        Error::Serialization(format!("bad coefficient `{}`", t.coeff))
                    })?;
                    Ok((t.exps, c))
                })
                .collect::<Result<Vec<_>, Error>>()?;
        LaurentPoly::from_terms(&vars, terms)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        LaurentPoly::try_from(j).map_err(serde::de::Error::custom)
    }
}
