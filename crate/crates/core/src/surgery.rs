//! Seiberg-Witten polynomials of the link-surgery manifolds
//! `X_p = E(n, 1; L_p)` with `L_p = K ∪ Γ_p`.
//!
//! `SW(X_p) = (t_K - t_K^-1)^(n-1) * Δ_L(t_K^2, t_G^2)`. The two-variable
//! link polynomial `Δ_L(x, y)` is not known in closed form; what is known is
//! its `x = 1` specialization, which by Torres' formula is
//! `(y^lk - 1)/(y - 1) * Δ_Γ(y)`. With `lk = 1` and `Γ_p = T(p, p+1)` that is
//! the torus-knot polynomial itself, and its number of nonzero terms bounds
//! the number of basic classes of `X_p` from below.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::knot::{alexander_torus, KnotExpr, TorusKnotSpec};
use crate::laurent::{LaurentPoly, Monomial, VariableSet};

/// Variable of `t_K`, dual to `S^1 × μ(K)`.
pub const T_K: &str = "t_K";
/// Variable of `t_Γ`, dual to `S^1 × μ(Γ_p)`.
pub const T_G: &str = "t_G";

/// `{x, y}`, the variables of a two-component link polynomial.
pub fn link_variables() -> &'static VariableSet {
    static VARS: OnceLock<VariableSet> = OnceLock::new();
    VARS.get_or_init(|| VariableSet::new(["x", "y"]).expect("valid names"))
}

/// `{t_K, t_G}`, the variables of `SW(X_p)`.
pub fn sw_variables() -> &'static VariableSet {
    static VARS: OnceLock<VariableSet> = OnceLock::new();
    VARS.get_or_init(|| VariableSet::new([T_K, T_G]).expect("valid names"))
}

/// The link `L_p = K ∪ Γ_p`: `K` is the companion knot (the trefoil by
/// default), `Γ_p` is the torus knot `T(p, p+1)` and `lk(K, Γ_p) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkFamilyMember {
    p: u64,
    companion_knot: KnotExpr,
    gamma: TorusKnotSpec,
    linking_number: u64,
}

impl LinkFamilyMember {
    /// Member `p` with the left-handed trefoil as companion.
    pub fn new(p: u64) -> Result<Self> {
        Self::with_companion(p, KnotExpr::left_trefoil())
    }

    pub fn with_companion(p: u64, companion_knot: KnotExpr) -> Result<Self> {
        if p == 0 {
            return Err(Error::InvalidParameter(
                "family index p must be >= 1".into(),
            ));
        }
        let q = p
            .checked_add(1)
            .ok_or_else(|| Error::InvalidParameter("family index p too large".into()))?;
        Ok(LinkFamilyMember {
            p,
            companion_knot,
            gamma: TorusKnotSpec::new(p, q)?,
            linking_number: 1,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn companion_knot(&self) -> &KnotExpr {
        &self.companion_knot
    }

    pub fn gamma(&self) -> TorusKnotSpec {
        self.gamma
    }

    pub fn linking_number(&self) -> u64 {
        self.linking_number
    }
}

/// `X_p = E(n, 1; L_p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgerySpec {
    n: u64,
    member: LinkFamilyMember,
}

impl SurgerySpec {
    pub fn new(n: u64, member: LinkFamilyMember) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("E(n) requires n >= 1".into()));
        }
        Ok(SurgerySpec { n, member })
    }

    /// Shorthand for `X_p` over `E(n)` with the default companion.
    pub fn family(n: u64, p: u64) -> Result<Self> {
        Self::new(n, LinkFamilyMember::new(p)?)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn member(&self) -> &LinkFamilyMember {
        &self.member
    }
}

/// `Δ_L(1, y) = (1 + y + ... + y^(lk-1)) * Δ_Γ(y)`; zero when `lk = 0`.
pub fn torres_specialize(delta_gamma: &LaurentPoly, lk: u64) -> Result<LaurentPoly> {
    let vars = delta_gamma.variables();
    if vars.len() != 1 {
        return Err(Error::NotUnivariate(vars.len()));
    }
    match lk {
        0 => Ok(LaurentPoly::zero(vars)),
        1 => Ok(delta_gamma.clone()),
        _ => delta_gamma.geometric_sum_like(lk)?.mul(delta_gamma),
    }
}

/// `(t_K - t_K^-1)^(n-1)` over `{t_K, t_G}`.
pub fn sw_prefactor(n: u64) -> Result<LaurentPoly> {
    let vars = sw_variables();
    let base = LaurentPoly::from_terms(vars, [(vec![1, 0], 1), (vec![-1, 0], -1)])?;
    let k = n
        .checked_sub(1)
        .ok_or_else(|| Error::InvalidParameter("E(n) requires n >= 1".into()))?;
    let k = u32::try_from(k).map_err(|_| Error::ExponentOverflow)?;
    base.pow(k)
}

/// `SW(X_p) = (t_K - t_K^-1)^(n-1) * Δ_L(t_K^2, t_G^2)`.
pub fn sw_link_surgery(spec: &SurgerySpec, delta_l: &LaurentPoly) -> Result<LaurentPoly> {
    if delta_l.variables() != link_variables() {
        return Err(Error::VariableMismatch {
            left: delta_l.variables().to_string(),
            right: link_variables().to_string(),
        });
    }
    let substituted = delta_l.substitute(
        sw_variables(),
        &[
            ("x", Monomial::new(vec![2, 0])),
            ("y", Monomial::new(vec![0, 2])),
        ],
    )?;
    sw_prefactor(spec.n)?.mul(&substituted)
}

/// Number of nonzero terms of `Δ_{T(p,p+1)}`, a lower bound for the number
/// of basic classes of `X_p`.
pub fn basic_class_lower_bound(p: u64) -> Result<u64> {
    let member = LinkFamilyMember::new(p)?;
    Ok(alexander_torus(member.gamma())?.term_count() as u64)
}

/// Seiberg-Witten data for one `X_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwResult {
    pub p: u64,
    pub n: u64,
    /// Full `SW(X_p)` over `{t_K, t_G}`; only known when a two-variable link
    /// polynomial is supplied.
    pub polynomial: Option<LaurentPoly>,
    /// `SW(X_p)` at `t_K = 1`, over `{t_G}`. Zero for `n >= 2`.
    pub specialization_at_tk1: LaurentPoly,
    /// `Δ_L(1, t_G^2)`: the Torres specialization pushed through
    /// `y -> t_G^2`. Equals `specialization_at_tk1` when `n = 1`.
    pub torres_specialization: LaurentPoly,
    /// Term count of `torres_specialization`, independent of `n`.
    pub basic_class_lower_bound: u64,
}

/// Computes [`SwResult`] through the Torres specialization alone.
pub fn sw_specialized(spec: &SurgerySpec) -> Result<SwResult> {
    sw_specialized_inner(spec, None)
}

/// Like [`sw_specialized`], also filling in the full polynomial from a
/// supplied `Δ_L(x, y)`. The link polynomial must reproduce the Torres
/// specialization at `x = 1` up to units.
pub fn sw_specialized_with_link(spec: &SurgerySpec, delta_l: &LaurentPoly) -> Result<SwResult> {
    sw_specialized_inner(spec, Some(delta_l))
}

fn sw_specialized_inner(spec: &SurgerySpec, delta_l: Option<&LaurentPoly>) -> Result<SwResult> {
    let member = spec.member();
    let delta_gamma = alexander_torus(member.gamma())?;
    let in_y =
        delta_gamma.substitute(&VariableSet::single("y"), &[("t", Monomial::new(vec![1]))])?;
    let at_x1 = torres_specialize(&in_y, member.linking_number())?;

    let t_g = VariableSet::single(T_G);
    let torres_specialization = at_x1.substitute(&t_g, &[("y", Monomial::new(vec![2]))])?;
    let specialization_at_tk1 = if spec.n == 1 {
        torres_specialization.clone()
    } else {
        LaurentPoly::zero(&t_g)
    };

    let polynomial = match delta_l {
        None => None,
        Some(dl) => {
            let given = dl.evaluate_at_one("x")?;
            if !given.equal_up_to_units(&at_x1) {
                return Err(Error::InvalidParameter(format!(
                    "link polynomial gives Δ(1, y) = {given}, Torres formula gives {at_x1}"
                )));
            }
            Some(sw_link_surgery(spec, dl)?)
        }
    };

    Ok(SwResult {
        p: member.p(),
        n: spec.n,
        polynomial,
        basic_class_lower_bound: torres_specialization.term_count() as u64,
        specialization_at_tk1,
        torres_specialization,
    })
}

/// Wire form of [`SwResult`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SwResultJson {
    pub p: u64,
    pub n: u64,
    pub specialization: LaurentPoly,
    pub torres_specialization: LaurentPoly,
    pub lower_bound: u64,
    pub full_polynomial: FullPolynomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FullPolynomial {
    Known(LaurentPoly),
    Unavailable(Unavailable),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Unavailable {
    Unavailable,
}

impl From<&SwResult> for SwResultJson {
    fn from(r: &SwResult) -> Self {
        SwResultJson {
            p: r.p,
            n: r.n,
            specialization: r.specialization_at_tk1.clone(),
            torres_specialization: r.torres_specialization.clone(),
            lower_bound: r.basic_class_lower_bound,
            full_polynomial: match &r.polynomial {
                Some(poly) => FullPolynomial::Known(poly.clone()),
                None => FullPolynomial::Unavailable(Unavailable::Unavailable),
            },
        }
    }
}
