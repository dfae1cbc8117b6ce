//! Groebner-basis engine over Q: normal forms with cofactor certificates,
//! ideal membership and equality, elimination, graded minimal-generator
//! counts and Hilbert functions. Deterministic by construction: fixed S-pair
//! strategy, fixed tie-breaking, canonical reduced bases.

mod graded;
mod groebner;
mod linalg;
mod order;

pub use graded::{hilbert_function, minimal_generators_by_degree, monomials_of_weighted_degree};
pub use groebner::{
    eliminate, groebner_basis, ideal_equal, ideal_membership, membership_against, normal_form,
    GroebnerBasis, MembershipCertificate,
};
pub use linalg::rank_over_q;
pub use order::MonomialOrder;

use gradedpoly::Monomial;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("generators live over different variable tables")]
    TableMismatch,
    #[error("computation budget of {budget} reduction steps exceeded ({context})")]
    BudgetExceeded { budget: u64, context: String },
    #[error("inhomogeneous generator: monomials {0:?} and {1:?} differ in weighted degree")]
    InhomogeneousInput(Monomial, Monomial),
    #[error("block elimination order required, with the eliminated variables in front")]
    BadEliminationOrder,
    #[error("{0}")]
    Poly(#[from] gradedpoly::PolyError),
}
