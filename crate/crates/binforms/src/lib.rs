//! Torus-equivariant classes of binary-form spaces: the Chow rings of
//! P(A(N)) and of (P^1)^N, small-diagonal classes, closed-form multiplication
//! pushforwards with a brute-force oracle, discriminant-ideal generation
//! checks with replayable certificates, and the affine cone classes.

mod checks;
mod cone;
mod push;
mod ring;

pub use checks::{
    check_comb, check_comb2, check_square_h, check_square_power, two_generator_pairs,
    verify_two_generator_theorem, TwoGeneratorOutcome, GAMMA_HALVING_PAIRS,
};
pub use cone::{affine_cone_class, cone_convention, to_gl2_basis, ConeConvention};
pub use push::{
    delta_small_diagonal, delta_small_diagonal_product, discriminant_ideal, gamma_class, h_class,
    push_pi1_unit, push_pi_closed, push_pi_oracle, symmetrization_multiplicity,
};
pub use ring::{tauh_table, DiagonalRing, EquivariantClass, ProjectiveRing, RingTag};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BinformsError {
    #[error("parameter out of range: {0}")]
    Param(String),
    #[error("class is not symmetric in t0, t1: {0}")]
    NotGL2Equivariant(String),
    #[error("oracle multiplicity convention violated: {0}")]
    OracleInconsistency(String),
    #[error("cone convention calibration found {0} candidates")]
    CalibrationAmbiguous(usize),
    #[error(transparent)]
    Ideal(#[from] ideals::IdealError),
    #[error(transparent)]
    Poly(#[from] gradedpoly::PolyError),
}
