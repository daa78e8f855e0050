use thiserror::Error;

use crate::report::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("table is not a group: {0}")]
    NotAGroup(ValidationReport),

    #[error("element {0} is out of range for a group of order {1}")]
    ElementOutOfRange(usize, usize),

    #[error("subset is not a subgroup")]
    NotASubgroup,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("section is not a transversal: {0}")]
    NotATransversal(String),

    #[error("identification is supported up to order 48, got {0}")]
    UnsupportedOrder(usize),

    #[error("presentation z^{n}=1, x^2=z^{p}, x^-1 z x=z^{q} is inconsistent: {congruence}")]
    PresentationInconsistent {
        n: u64,
        p: u64,
        q: u64,
        congruence: String,
    },

    #[error("automorphism action rejected: {0}")]
    InvalidAction(ValidationReport),

    #[error("cocycle rejected: {0}")]
    InvalidCocycle(ValidationReport),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("unknown object {0:?}")]
    UnknownObject(String),

    #[error("unknown element {0:?}")]
    UnknownElement(String),

    #[error("unknown preset {0:?}")]
    UnknownPreset(String),

    #[error("degenerate dyad: both pitch classes are {0}")]
    DegenerateDyad(u32),

    #[error("duration must be strictly positive, got {0}")]
    NonPositiveDuration(String),

    #[error("matrix is not diagonal or antidiagonal with positive entries: {0}")]
    InvalidShape(String),

    #[error("time-spans overlap: {0}")]
    Overlap(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}
