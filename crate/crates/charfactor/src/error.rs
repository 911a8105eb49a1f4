//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharError {
    #[error("padding length {given} is shorter than the partition length {needed}")]
    PaddingTooShort { given: usize, needed: usize },

    #[error("partition length {length} exceeds the bound {bound} for this specialization")]
    LengthBound { length: usize, bound: usize },

    #[error("invalid residue list E: {0}")]
    InvalidResidueList(String),

    #[error("invalid asymmetric spec: {0}")]
    InvalidAsymmetricSpec(String),

    #[error("partition is not ({z1},{z2},k)-asymmetric for any k")]
    NotAsymmetric { z1: i64, z2: i64 },

    #[error("invalid lattice label: {0}")]
    InvalidLabel(String),

    #[error("division by zero in Q(ω)")]
    DivisionByZero,

    #[error("zero base in Laurent evaluation")]
    ZeroBase,

    #[error("evaluation point is not generic: {0}")]
    NonGenericPoint(String),

    #[error("cannot parse rational `{0}` (expected p or p/q)")]
    BadRational(String),

    #[error("malformed JSON for {0}")]
    BadJson(String),

    #[error("usage error: {0}")]
    Usage(String),
}
