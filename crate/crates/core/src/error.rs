use thiserror::Error;

/// Errors produced anywhere in the workbench.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator vanishes at q = {at}")]
    DenominatorVanishes { at: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("generator index ({row}, {col}) outside a {rows}x{cols} matrix")]
    IndexOutOfBounds {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("bad shape: {0}")]
    BadShape(String),
    #[error("transpose needs a square ambient algebra, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("not a partial order: {0}")]
    NotAPoset(String),
    #[error("not a lattice: {0}")]
    NotALattice(String),
    #[error("lattice is not distributive: {0}")]
    NotDistributive(String),
    #[error("{alpha} is not below {beta}")]
    NotComparable { alpha: String, beta: String },
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("invalid realization: {0}")]
    BadRealization(String),
    #[error("standard monomial coordinates are linearly dependent in block {block}")]
    RankDeficient { block: String },
    #[error("product {0} is not in the span of standard monomials")]
    NotInSpan(String),
    #[error("invariant violated for {pair}: {reason}")]
    InvariantViolation { pair: String, reason: String },
    #[error("inconsistent toric parameters: {0}")]
    InconsistentParameters(String),
    #[error("presentation is not confluent: {0}")]
    NotConfluent(String),
    #[error("weight violation in relation {relation}: term {term}")]
    WeightViolation { relation: String, term: String },
    #[error("Hilbert numerator reconstruction failed: {0}")]
    ReconstructionFailed(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("integer overflow: {0}")]
    Overflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Variant name, for machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DenominatorVanishes { .. } => "DenominatorVanishes",
            Error::DivisionByZero => "DivisionByZero",
            Error::Parse { .. } => "Parse",
            Error::IndexOutOfBounds { .. } => "IndexOutOfBounds",
            Error::BadShape(_) => "BadShape",
            Error::NotSquare { .. } => "NotSquare",
            Error::NotAPoset(_) => "NotAPoset",
            Error::NotALattice(_) => "NotALattice",
            Error::NotDistributive(_) => "NotDistributive",
            Error::NotComparable { .. } => "NotComparable",
            Error::UnknownElement(_) => "UnknownElement",
            Error::BadRealization(_) => "BadRealization",
            Error::RankDeficient { .. } => "RankDeficient",
            Error::NotInSpan(_) => "NotInSpan",
            Error::InvariantViolation { .. } => "InvariantViolation",
            Error::InconsistentParameters(_) => "InconsistentParameters",
            Error::NotConfluent(_) => "NotConfluent",
            Error::WeightViolation { .. } => "WeightViolation",
            Error::ReconstructionFailed(_) => "ReconstructionFailed",
            Error::Invalid(_) => "Invalid",
            Error::Overflow(_) => "Overflow",
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Invalid(format!("json: {e}"))
    }
}
