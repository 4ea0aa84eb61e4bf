//! Crate-wide error type.
//!
//! Every fallible operation in this crate reports failure through [`Error`].
//! Variants name the violated invariant and carry the offending value so
//! callers (and the CLI) can print a diagnostic without further context.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// All the ways validation or computation can fail.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A distribution, spectrum, or matrix was constructed from no data.
    #[error("input is empty; at least one element is required")]
    EmptyInput,

    /// An entry was NaN or infinite where a finite number is required.
    #[error("entry {index} is {value}, which is not finite")]
    NonFinite { index: usize, value: f64 },

    /// A probability weight was negative beyond the negativity tolerance.
    #[error("entry {index} is {value}, below the negativity tolerance")]
    NegativeWeight { index: usize, value: f64 },

    /// Weights summed to zero (or failed to sum to a positive finite
    /// number), so no normalization exists.
    #[error("weights sum to {0}; cannot normalize to a distribution")]
    NotNormalizable(f64),

    /// Strict validation: weights were expected to already sum to one.
    #[error("weights sum to {0}, not 1 within the strict tolerance")]
    NotNormalized(f64),

    /// A matrix departed from `A = A†` by more than the Hermiticity
    /// tolerance (value is the largest deviation found).
    #[error("matrix is not Hermitian: max |A - A†| entry is {0}")]
    NotHermitian(f64),

    /// A matrix row had a different length than the number of rows.
    #[error("matrix is not square: {rows} rows but row {index} has {len} entries")]
    NotSquare { rows: usize, index: usize, len: usize },

    /// Two arrays that must agree in length did not.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// The Jacobi eigensolver failed to reach its convergence target.
    #[error("eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    /// A density matrix had an eigenvalue below the clip tolerance.
    #[error("density matrix has negative eigenvalue {0}")]
    NegativeEigenvalue(f64),

    /// Strict validation: a density matrix trace strayed from one.
    #[error("density matrix trace is {0}, not 1 within tolerance")]
    TraceNotOne(f64),

    /// A matrix function was evaluated where it is undefined.
    #[error("matrix function is undefined at eigenvalue {0}")]
    DomainError(f64),

    /// A temperature was zero, negative, or not finite.
    #[error("temperature {0} is not a positive finite number")]
    NonpositiveTemperature(f64),

    /// Embedding requires full support; a zero weight has no energy level.
    #[error("weight {index} is zero; embedding requires full support")]
    ZeroProbability { index: usize },

    /// An entropy order was negative or NaN.
    #[error("entropy order {0} is invalid; q must be in [0, ∞]")]
    InvalidOrder(f64),

    /// An operation that divides by `q - 1` received `q` too close to one.
    #[error("order {0} is too close to 1; the q-deformation degenerates")]
    DegenerateOrder(f64),

    /// The q-derivative is undefined at the basepoint `x = 0`.
    #[error("q-derivative is undefined at x = 0")]
    ZeroPoint,

    /// A secant probe was requested with zero temperature step.
    #[error("temperature step must be nonzero")]
    ZeroStep,
}
