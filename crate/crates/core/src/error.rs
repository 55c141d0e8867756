use alloc::string::String;

/// Errors raised by the algebra, brace and construction layers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a prime modulus")]
    NotPrime(u64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("order exceeds cap {cap}")]
    CapExceeded { cap: u64 },
    #[error("{value} is not a unit modulo {modulus}")]
    NotAUnit { value: u64, modulus: u64 },
    #[error("primes must differ (got {0} twice)")]
    EqualPrimes(u32),
    #[error("work budget exceeded: {needed} > {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("index {index} out of range for carrier of size {size}")]
    OutOfRange { index: usize, size: usize },
    #[error("element does not belong to the carrier: {0}")]
    NotInCarrier(String),
    #[error("invalid family specification: {0}")]
    SpecInvalid(String),
    #[error("asymmetric product condition {condition} violated: {detail}")]
    ConditionViolation {
        condition: &'static str,
        detail: String,
    },
    #[error("action is not a brace automorphism: {0}")]
    ActionNotAutomorphism(String),
    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),
    #[error("exponent {target} at block {block} is below the constructible bound")]
    BelowBound { block: usize, target: u64 },
    #[error("{kind} requires {expected}")]
    KindPrimeMismatch {
        kind: &'static str,
        expected: &'static str,
    },
    #[error("no witness exists: {0}")]
    NoWitness(String),
    #[error("ideal lattice is incomplete: {0}")]
    IncompleteLattice(String),
    #[error("brace axioms have not been verified")]
    AxiomsNotVerified,
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
