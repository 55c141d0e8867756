//! Prime-field scalars, matrices, bilinear forms and orthogonal maps.

pub mod field;
pub mod form;
pub mod matrix;
pub mod poly;

pub use field::{is_prime, unit_order, Residue};
pub use form::{
    companion, companion_cyclotomic, hyperbolic_witness, invariant_symmetric_forms, is_orthogonal,
    matrix_order, minus_id_bijective, negation_witness, BilinearForm, OrthogonalMap,
};
pub use matrix::{Matrix, Subspace};
