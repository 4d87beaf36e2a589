//! Crate-wide error type.

use thiserror::Error;

/// Errors raised by field construction, polynomial arithmetic, the
/// d.d.c. machinery, Groebner runs and solution search.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic must be an odd prime, got {0}")]
    EvenCharacteristic(u64),
    #[error("modulus is reducible over GF({p}): divisible by {factor}")]
    ReducibleModulus { p: u64, factor: String },
    #[error("modulus degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivideByZero,
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("no modulus known for GF({p}^{k})")]
    NoModulusKnown { p: u64, k: usize },
    #[error("polynomial does not split within extension degree {max}")]
    ExceedsMaxDegree { max: usize },
    #[error("polynomial has a term t^{exp} with exponent not divisible by {m}")]
    BadSupport { exp: usize, m: u64 },
    #[error("invalid quadruple ({p},{m},{u_tilde},{n}): {reason}")]
    InvalidQuadruple {
        p: u64,
        m: u64,
        u_tilde: u64,
        n: u64,
        reason: String,
    },
    #[error("invalid enumeration parameters: {0}")]
    InvalidParameters(String),
    #[error("polynomial is not a solution of the differential data criterion")]
    NotADdcSolution,
    #[error("root-matrix size mismatch: |S| = {s_len} but N/m = {cols}")]
    NonSquareMatrix { s_len: usize, cols: usize },
    #[error("operands belong to different variable tables")]
    TableMismatch,
    #[error("input is not a Groebner basis: S-polynomial of pair ({0},{1}) does not reduce to 0")]
    NotAGroebnerBasis(usize, usize),
    #[error("ideal is not zero-dimensional: no pure-power leading term for variable {0}")]
    NotZeroDimensional(String),
    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("computation cancelled after {pairs_processed} pairs (basis size {basis_size})")]
    Cancelled {
        pairs_processed: u64,
        basis_size: usize,
    },
    #[error("basis guard tripped: {0}")]
    GuardTripped(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
