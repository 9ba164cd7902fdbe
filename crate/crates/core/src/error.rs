use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("too many variables: {0} (at most {max})", max = crate::monomial::MAX_VARS)]
    TooManyVariables(usize),
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("zero ideal: {0}")]
    ZeroIdeal(String),
    #[error("unit ideal: {0}")]
    UnitIdeal(String),
    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("intersection is not finite: {0}")]
    InfiniteIntersection(String),
    #[error("component contained in linear space: {0}")]
    ComponentInSubspace(String),
    #[error("shared component: {0}")]
    SharedComponent(String),
    #[error("not a curve: {0}")]
    NotACurve(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;
