//! Exact computation of Alexander polynomials of torus knots and their
//! connected sums, Torres specializations of two-component link
//! polynomials, and Seiberg-Witten polynomials of the link-surgery family
//! `X_p = E(n, 1; K ∪ T(p, p+1))`, together with certificates that the
//! basic-class lower bounds of that family are unbounded.

pub mod error;
pub mod family;
pub mod knot;
pub mod laurent;
pub mod surgery;

pub use error::{Error, Result};
pub use family::{
    analyze_family, analyze_family_with_cap, certify_unbounded, verify_certificate, FamilyReport,
    FamilyRow, UnboundednessCertificate, Witness, DEFAULT_P_CAP,
};
pub use knot::fox::{alexander_fox_oracle, GroupPresentation};
pub use knot::{alexander_expr, alexander_torus, genus_torus, KnotExpr, TorusKnotSpec};
pub use laurent::{LaurentPoly, Monomial, VariableSet};
pub use surgery::{
    basic_class_lower_bound, sw_link_surgery, sw_specialized, sw_specialized_with_link,
    torres_specialize, LinkFamilyMember, SurgerySpec, SwResult, SwResultJson,
};
