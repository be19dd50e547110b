use perfbase_exactla::{FqMatrix, MatrixSpace};
use perfbase_gf::Field;

use crate::TensorError;

/// Tensor `(X_1 | … | X_k)` with slices of shape `n × m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3 {
    field: Field,
    slices: Vec<FqMatrix>,
}

impl Tensor3 {
    pub fn new(slices: Vec<FqMatrix>) -> Result<Tensor3, TensorError> {
        let first = slices.first().ok_or(TensorError::NoSlices)?;
        let field = first.field().clone();
        for s in &slices {
            if s.field() != &field {
                return Err(perfbase_exactla::LinAlgError::FieldMismatch.into());
            }
            if s.shape() != first.shape() {
                return Err(TensorError::ShapeMismatch {
                    left: first.shape(),
                    right: s.shape(),
                });
            }
        }
        Ok(Tensor3 { field, slices })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// `(k, n, m)`.
    pub fn shape(&self) -> (usize, usize, usize) {
        let (n, m) = self.slices[0].shape();
        (self.slices.len(), n, m)
    }

    pub fn slices(&self) -> &[FqMatrix] {
        &self.slices
    }

    /// First slice space: the span of the slices.
    pub fn slice_space(&self) -> MatrixSpace {
        let (_, n, m) = self.shape();
        MatrixSpace::span(&self.field, n, m, &self.slices).expect("slices share shape and field")
    }

    /// True when the slices are linearly independent.
    pub fn is_nondegenerate(&self) -> bool {
        self.slice_space().dim() == self.slices.len()
    }

    /// `(L·X_1·N | … | L·X_k·N)`.
    pub fn transform(&self, left: &FqMatrix, right: &FqMatrix) -> Result<Tensor3, TensorError> {
        let slices = self
            .slices
            .iter()
            .map(|s| Ok(left.try_mul(s)?.try_mul(right)?))
            .collect::<Result<Vec<_>, TensorError>>()?;
        Tensor3::new(slices)
    }
}

/// Kruskal-type lower bound `dim + d − 1` on the tensor rank of a space of
/// dimension `dim` and minimum rank `d` (0 for the zero space).
pub fn kruskal_bound(dim: usize, d: usize) -> usize {
    if dim == 0 {
        0
    } else {
        dim + d.max(1) - 1
    }
}
