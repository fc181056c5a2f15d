use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid variable set: {0}")]
    InvalidVariables(String),

    #[error("variable sets differ: [{left}] vs [{right}]")]
    VariableMismatch { left: String, right: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("no substitution given for variable `{0}`")]
    UnmappedVariable(String),

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("operation needs a polynomial in at most one variable, got {0} variables")]
    NotUnivariate(usize),

    #[error("division by zero")]
    DivisionByZero,

    #[error("not exactly divisible")]
    NotDivisible,

    #[error("not a unit multiple of a symmetric polynomial")]
    NotSymmetrizable,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid torus knot parameters ({p}, {q}): {reason}")]
    InvalidTorusKnot {
        p: u64,
        q: u64,
        reason: &'static str,
    },

    #[error("unsupported presentation: {0}")]
    UnsupportedPresentation(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("p range [{p_min}, {p_max}] invalid for cap {cap}")]
    RangeViolation { p_min: u64, p_max: u64, cap: u64 },

    #[error("p cap {cap} reached before a lower bound exceeded {target}")]
    CapExhausted { target: u64, cap: u64 },

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("serialization error: {0}")]
    Serialization(String),
}

impl Error {
    /// True for errors that indicate a broken invariant inside the pipeline
    /// rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_) | Error::CapExhausted { .. })
    }
}
