//! Exact dense linear algebra over a [`Field`](perfbase_gf::Field).
//!
//! [`FqMatrix`] is a row-major matrix, [`MatrixSpace`] an `F_q`-subspace of
//! `K^{n×m}` stored through the canonical reduced row-echelon basis of the
//! vectorized members, and [`Echelon`] an incremental span used by searches.
//! The trace form `Tr(A·Bᵗ)` equals the dot product of the row-major
//! vectorizations, which is how orthogonal complements are computed.

mod echelon;
mod matrix;
mod space;

pub use echelon::Echelon;
pub use matrix::{trace_pair, FqMatrix, Rref};
pub use space::MatrixSpace;

/// Errors raised by linear-algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinAlgError {
    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("matrix is singular")]
    Singular,
    #[error("entry {0} is not a field element")]
    BadEntry(u64),
    #[error("rows have inconsistent lengths")]
    Ragged,
}
