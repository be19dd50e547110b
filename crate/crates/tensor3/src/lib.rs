//! Three-tensors over a finite field, perfect-base verification and exact
//! brute-force oracles.
//!
//! A tensor `X ∈ K^{k×n×m}` is stored as its `k` slices. Its tensor rank is
//! the least `R` for which some `R` linearly independent rank-one matrices
//! span a space containing the slice space; [`verify_base`] checks a claimed
//! witness and [`exhaustive_trk`] finds a minimal one by search.

mod search;
mod tensor;
mod verify;

pub use search::{
    exhaustive_trk, guard_from_env, min_rank, rank_one_generators, TrkResult, DEFAULT_GUARD,
    GUARD_ENV,
};
pub use tensor::{kruskal_bound, Tensor3};
pub use verify::{verify_base, BaseCandidate, VerificationReport};

use perfbase_exactla::LinAlgError;

/// Errors raised by tensor operations and oracles.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TensorError {
    #[error("tensor needs at least one slice")]
    NoSlices,
    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("search guard of {guard} steps exceeded")]
    GuardExceeded { guard: u64 },
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}
