//! Rank-metric codes over `F_q` obtained by expanding `F_{q^m}`-linear
//! vector codes, and perfect bases that certify their tensor rank.
//!
//! A vector code `C ≤ F_{q^m}^n` becomes a matrix code `Γ(C) ≤ F_q^{n×m}`
//! through a [`GammaBasis`]. On top of that sit (twisted) Gabidulin codes,
//! exact rank and Hamming distances, the MRD and MTR predicates, and the
//! constructions that produce tensor-rank witnesses: the interpolation base
//! of a 1-dimensional Gabidulin code, bases for its dual, row extension,
//! shortening, and [`build_mtr`] for general `[n×m, k, d]` parameters.

mod code;
mod gabidulin;
mod gamma;
mod mtr;

pub use code::{
    dual_code, is_mrd, is_mtr, min_hamming_distance, min_rank_distance, psi_block, BlockCode,
    RankCode, VectorCode,
};
pub use gabidulin::{gabidulin, LinearizedPoly};
pub use gamma::{gamma_expand, gamma_expand_code, GammaBasis};
pub use mtr::{
    build_mtr, dual_gabidulin_mtr_base, extend_base_lindep, one_dim_witness, power_code_witness,
    shorten_mtr, two_dim_bound, Shortened, TwoDimBound,
};

use perfbase_construct::ConstructError;
use perfbase_exactla::{FqMatrix, LinAlgError};
use perfbase_gf::{Elem, Field, GfError};
use perfbase_tensor3::TensorError;

/// Default codeword budget for the exhaustive distance scans.
pub const DISTANCE_GUARD: u64 = 1 << 24;

/// Errors raised by the coding layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RmError {
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("{0} is not an extension field")]
    NotAnExtension(String),
    #[error("eta has norm (-1)^(mk)")]
    BadEta,
    #[error("s = {s} is not coprime to m = {m}")]
    NotCoprime { s: u32, m: u32 },
    #[error("evaluation points are linearly dependent over the base field")]
    DependentBasis,
    #[error("generator rows are linearly dependent")]
    DependentGenerators,
    #[error("distance scan exceeds the guard of {guard} codewords")]
    GuardExceeded { guard: u64 },
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("not a perfect base of the code: {0}")]
    NotABase(String),
    #[error("invalid index subset: {0}")]
    BadSubset(String),
    #[error("parameters out of range: {0}")]
    ParametersOutOfRange(String),
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("field of order {order} is too small: need at least {needed}")]
    FieldTooSmall { needed: u64, order: u32 },
    #[error("no construction covers this input: {0}")]
    NotCovered(String),
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error("{0}")]
    Tensor(TensorError),
}

impl From<TensorError> for RmError {
    fn from(e: TensorError) -> RmError {
        match e {
            TensorError::GuardExceeded { guard } => RmError::GuardExceeded { guard },
            TensorError::LinAlg(e) => RmError::LinAlg(e),
            other => RmError::Tensor(other),
        }
    }
}

/// Field of order `q`, which must be a prime power.
pub fn field_of_order(q: u32) -> Result<Field, RmError> {
    match perfbase_gf::prime_factors(q as u64).as_slice() {
        &[p] => {
            let p = p as u32;
            let deg = (1..).find(|&e| p.pow(e) >= q).expect("q is a power of p");
            Ok(Field::new(p, deg, None)?)
        }
        _ => Err(RmError::BadParameter(format!("{q} is not a prime power"))),
    }
}

/// Coefficients `λ` with `λ·rows = target`, if any.
pub(crate) fn solve_left(rows: &FqMatrix, target: &[Elem]) -> Option<Vec<Elem>> {
    let field = rows.field();
    let r = rows.rows();
    let aug = FqMatrix::from_fn(field, rows.cols(), r + 1, |i, j| {
        if j < r {
            rows.get(j, i)
        } else {
            target[i]
        }
    });
    let red = aug.rref();
    if red.pivots.contains(&r) {
        return None;
    }
    let mut out = vec![0; r];
    for (row, &col) in red.pivots.iter().enumerate() {
        out[col] = red.matrix.get(row, r);
    }
    Some(out)
}
