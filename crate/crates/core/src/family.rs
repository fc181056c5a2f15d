//! Family-level conclusions: per-`p` reports and certificates that the
//! basic-class lower bounds of `X_p` grow without bound.
//!
//! An [`UnboundednessCertificate`] for a target `m` lists family indices with
//! strictly increasing lower bounds, the last exceeding `m`. Since
//! diffeomorphic manifolds have the same number of basic classes, a
//! certificate for every `m` means the family contains infinitely many
//! diffeomorphism types. A certificate does not claim that any particular
//! pair `X_a`, `X_b` differs.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::knot::{alexander_torus, genus_torus};
use crate::laurent::LaurentPoly;
use crate::surgery::{basic_class_lower_bound, LinkFamilyMember};

/// Default upper limit on `p` for sweeps and certificate searches.
pub const DEFAULT_P_CAP: u64 = 1000;

/// Version tag written into every certificate.
pub const CERTIFICATE_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyRow {
    pub p: u64,
    pub delta_gamma: LaurentPoly,
    pub lower_bound: u64,
    pub lemma63_ok: bool,
    pub genus: u64,
    pub span: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyReport {
    pub n: u64,
    pub rows: Vec<FamilyRow>,
}

fn family_row(p: u64) -> Result<FamilyRow> {
    let member = LinkFamilyMember::new(p)?;
    let gamma = member.gamma();
    let delta_gamma = alexander_torus(gamma)?;
    let lower_bound = delta_gamma.term_count() as u64;
    let span = delta_gamma.span().unwrap_or(0) as u64;
    let genus = genus_torus(gamma);
    if span != 2 * genus {
        return Err(Error::Internal(format!(
            "span {span} of Δ for p = {p} is not twice the genus {genus}"
        )));
    }
    Ok(FamilyRow {
        p,
        delta_gamma,
        lower_bound,
        lemma63_ok: lower_bound >= p,
        genus,
        span,
    })
}

pub fn analyze_family(n: u64, p_min: u64, p_max: u64) -> Result<FamilyReport> {
    analyze_family_with_cap(n, p_min, p_max, DEFAULT_P_CAP)
}

/// One row per `p` in `p_min..=p_max`, sorted by `p`. Rows are computed in
/// parallel; the result does not depend on the schedule.
pub fn analyze_family_with_cap(n: u64, p_min: u64, p_max: u64, cap: u64) -> Result<FamilyReport> {
    if n == 0 {
        return Err(Error::InvalidParameter("E(n) requires n >= 1".into()));
    }
    if p_min == 0 || p_min > p_max || p_max > cap {
        return Err(Error::RangeViolation { p_min, p_max, cap });
    }
    let rows = (p_min..=p_max)
        .into_par_iter()
        .map(family_row)
        .collect::<Result<Vec<_>>>()?;
    Ok(FamilyReport { n, rows })
}

impl FamilyReport {
    pub fn all_lemma63_ok(&self) -> bool {
        self.rows.iter().all(|r| r.lemma63_ok)
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Serialization(e.to_string()))
    }

    /// CSV with columns `p,lower_bound,lemma63_ok,genus,span,delta_gamma`.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let ser = |e: csv::Error| Error::Serialization(e.to_string());
        w.write_record([
            "p",
            "lower_bound",
            "lemma63_ok",
            "genus",
            "span",
            "delta_gamma",
        ])
        .map_err(ser)?;
        for r in &self.rows {
            w.write_record([
                r.p.to_string(),
                r.lower_bound.to_string(),
                r.lemma63_ok.to_string(),
                r.genus.to_string(),
                r.span.to_string(),
                r.delta_gamma.to_string(),
            ])
            .map_err(ser)?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| Error::Serialization(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Serialization(e.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Witness {
    pub p: u64,
    pub lower_bound: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnboundednessCertificate {
    pub schema_version: u32,
    pub target: u64,
    pub witnesses: Vec<Witness>,
}

impl UnboundednessCertificate {
    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Serialization(e.to_string()))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Serialization(e.to_string()))
    }
}

/// Scans `p = 1, 2, ...` and keeps each `p` whose lower bound beats every
/// earlier one, stopping at the first bound above `target`.
pub fn certify_unbounded(target: u64, p_cap: u64) -> Result<UnboundednessCertificate> {
    let mut witnesses: Vec<Witness> = Vec::new();
    for p in 1..=p_cap {
        let lower_bound = basic_class_lower_bound(p)?;
        if witnesses.last().is_none_or(|w| lower_bound > w.lower_bound) {
            witnesses.push(Witness { p, lower_bound });
            if lower_bound > target {
                return Ok(UnboundednessCertificate {
                    schema_version: CERTIFICATE_SCHEMA_VERSION,
                    target,
                    witnesses,
                });
            }
        }
    }
    Err(Error::CapExhausted { target, cap: p_cap })
}

/// Recomputes every witness from scratch. Lower bounds do not depend on `n`,
/// which only has to be a valid `E(n)` index.
pub fn verify_certificate(c: &UnboundednessCertificate, n: u64) -> bool {
    if n == 0 || c.schema_version != CERTIFICATE_SCHEMA_VERSION {
        return false;
    }
    let Some(last) = c.witnesses.last() else {
        return false;
    };
    if last.lower_bound <= c.target {
        return false;
    }
    let monotone = c
        .witnesses
        .windows(2)
        .all(|w| w[0].p < w[1].p && w[0].lower_bound < w[1].lower_bound);
    if !monotone {
        return false;
    }
    c.witnesses
        .iter()
        .all(|w| matches!(basic_class_lower_bound(w.p), Ok(b) if b == w.lower_bound))
}
