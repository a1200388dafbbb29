//! Crate-wide error type.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("missing value for symbol {0}")]
    MissingSymbolValue(String),

    #[error("matrix is not symplectic")]
    NotSymplectic,

    #[error("gamma-series support is unbounded")]
    UnboundedSupport,

    #[error("lattice generators are linearly dependent")]
    DependentGenerators,

    #[error("prefactor involves the differentiation symbol {0}")]
    PrefactorConflict(String),

    #[error("invalid label or diagram: {0}")]
    InvalidLabel(String),

    #[error("invalid highest weight: {0}")]
    InvalidWeight(String),

    #[error("expansion hypotheses unmet: {0}")]
    HypothesesUnmet(String),

    #[error("linear system inconsistent: {0}")]
    InconsistentSystem(String),

    #[error("vector not in span")]
    NotInSpan,

    #[error("operator unsupported on this symbol: {0}")]
    UnsupportedOperator(String),

    #[error("construction failed: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
