//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors raised by exact arithmetic, linear algebra and representation
/// construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Division by the zero rational function.
    #[error("division by zero rational function")]
    DivisionByZero,

    /// A denominator vanishes at the requested parameter specialization.
    #[error("denominator vanishes at the requested specialization")]
    PoleAtSpecialization,

    /// Matrix or vector dimensions do not match the operation.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Inversion of a matrix with zero determinant.
    #[error("matrix is singular")]
    SingularMatrix,

    /// A strand count outside the supported range.
    #[error("invalid strand count n = {0}")]
    InvalidN(usize),

    /// The subspace handed to the complement solver is not invariant.
    #[error("subspace is not invariant under the representation")]
    NotInvariant,

    /// The semisimplicity guard r^{2k} != 1 (k = 1..n) fails at the given r.
    #[error("guard violation: r^{{2k}} = 1 for some k = 1..{n} at r = {r}")]
    GuardViolation {
        /// The strand count whose guard was checked.
        n: usize,
        /// Decimal/fraction rendering of the offending r value.
        r: String,
    },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
