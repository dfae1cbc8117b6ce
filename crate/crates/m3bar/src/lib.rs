//! The fifteen-relation presentation of the genus-3 stable-curve Chow ring:
//! loading and auditing the relation data, resolving the flagged textual
//! ambiguities by constrained search, eliminating redundant generators over
//! Q, and restriction to the open quartic stratum.

mod presentation;
mod simplify;

pub use presentation::{
    audit_degrees, load_presentation, resolve_variants, Presentation, Relation, ResolveOutcome,
    Variant, DATA_SHA256,
};
pub use simplify::{
    eliminate_generator, faber_generator_counts, rational_simplify, restrict_open_stratum,
    EliminationStep, SimplifiedIdeal,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum M3barError {
    #[error("relation data parse failure: {0}")]
    Parse(String),
    #[error("relation data checksum mismatch: expected {expected}, found {found}")]
    ChecksumMismatch { expected: String, found: String },
    #[error("no variant assignment satisfies the resolution constraints")]
    UnresolvedPresentation,
    #[error("relation `{0}` not found")]
    NoSuchRelation(String),
    #[error("relation `{relation}` is not linear in `{variable}` with constant coefficient")]
    NotEliminable { relation: String, variable: String },
    #[error(transparent)]
    Ideal(#[from] ideals::IdealError),
    #[error(transparent)]
    Poly(#[from] gradedpoly::PolyError),
}
