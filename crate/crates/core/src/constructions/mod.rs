//! Builders: trivial braces, asymmetric and semidirect products, the cycle
//! and matrix families, and the prime non-simple example.

mod asymmetric;
pub mod catalog;
mod family;
mod semidirect;
mod table;
mod trivial;

pub use asymmetric::{asymmetric_product, ActionFn, AsymmetricProduct, FormFn};
pub use family::{
    build_cycle_family, build_cycle_family_relaxed, build_matrix_family, simplicity_witness_j,
    solve_exponents, validate_cycle_spec, validate_matrix_spec, CycleBlock, CycleFamilySpec,
    ExponentSplit, FamilyBrace, FamilyKind, MatrixBlock, MatrixFamilySpec, SpecCheck, SpecReport,
};
pub use semidirect::{
    build_prime_example, extend_by_automorphism, prime_example_base, semidirect_product,
    BraceAction, PrimeExample, SemidirectProduct,
};
pub use table::TableBrace;
pub use trivial::{trivial_brace, TrivialBrace};
