//! Exact sparse multivariate polynomials with per-variable weights, over
//! arbitrary-precision rationals. The value type for every computation in
//! this workspace: all arithmetic is exact, nothing is ever rounded.

mod map;
mod monomial;
mod parse;
mod poly;
mod rational;
mod table;

pub use map::RingMap;
pub use monomial::Monomial;
pub use parse::parse_poly;
pub use poly::{
    elementary_symmetric, elementary_symmetric_indices, grevlex_cmp, GradedPoly, WeightedDegree,
};
pub use rational::{
    binomial_exact, denominator_primes_of, factorial_exact, prime_factors, rat, rat_int, Rational,
};
pub use table::VariableTable;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials live over different variable tables")]
    TableMismatch,
    #[error("no assignment for source variable `{0}`")]
    MissingAssignment(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("variable index {0} out of range")]
    IndexOutOfRange(usize),
}
