//! Discrete polynomials in the variables (−1)^{v_j} and the sl₂ action of
//! X̃′, Ỹ′, H̃′ on them.

mod harmonic;
mod operators;
mod poly;

pub use harmonic::{
    decompose, expected_dimension, harmonic_basis, harmonic_dimension, is_harmonic, recompose, specht_basis,
    x_matrix, x_rank, Polytabloid, EXACT_ENTRY_BUDGET,
};
pub use operators::{apply_h, apply_x, apply_y, commutator_checks};
pub use poly::DiscretePoly;
