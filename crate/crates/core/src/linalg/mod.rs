//! Exact dense linear algebra over the Gaussian rationals.
//!
//! Nothing in this module touches floating point. Equality is structural
//! because every rational is kept in lowest terms with a positive denominator,
//! so identities like `Γ¹Γ² + Γ²Γ¹ = 0` are checked with `==`.

mod antiunitary;
mod gaussian;
mod kernel;
mod matrix;

pub use antiunitary::Antiunitary;
pub use gaussian::{parse_rational, rational_to_string, GaussianRational, RationalParseError};
pub use kernel::{rational_rank, real_fixed_dim, real_fixed_dim_within};
pub use matrix::{pauli, ExactMatrix};

/// Errors from the linear-algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch in {op}: {lhs:?} vs {rhs:?}")]
    DimensionMismatch { op: &'static str, lhs: (usize, usize), rhs: (usize, usize) },
    #[error("matrix dimensions must be positive")]
    EmptyMatrix,
    #[error("expected {expected} entries, found {found}")]
    EntryCount { expected: usize, found: usize },
    #[error("rows have different lengths")]
    RaggedRows,
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("linear part is not unitary")]
    NotUnitary,
    #[error("antiunitary does not square to the identity")]
    NotInvolutive,
}
