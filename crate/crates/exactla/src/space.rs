use perfbase_gf::{Elem, Field};

use crate::{Echelon, FqMatrix, LinAlgError};

/// `F_q`-subspace of `K^{n×m}`.
///
/// The basis is the reduced row-echelon form of the vectorized spanning set,
/// so two spaces are equal exactly when their stored bases are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixSpace {
    field: Field,
    n: usize,
    m: usize,
    reduced: FqMatrix,
    pivots: Vec<usize>,
}

impl MatrixSpace {
    /// Span of the given matrices, all of shape `n × m`.
    pub fn span(
        field: &Field,
        n: usize,
        m: usize,
        mats: &[FqMatrix],
    ) -> Result<MatrixSpace, LinAlgError> {
        for a in mats {
            if a.field() != field {
                return Err(LinAlgError::FieldMismatch);
            }
            if a.shape() != (n, m) {
                return Err(LinAlgError::ShapeMismatch {
                    left: (n, m),
                    right: a.shape(),
                });
            }
        }
        let rows: Vec<Vec<Elem>> = mats.iter().map(|a| a.vectorize()).collect();
        Ok(MatrixSpace::from_vectors(field, n, m, &rows))
    }

    /// Span of row-major vectors of length `n·m`.
    pub fn from_vectors(field: &Field, n: usize, m: usize, vectors: &[Vec<Elem>]) -> MatrixSpace {
        let stacked = if vectors.is_empty() {
            FqMatrix::zeros(field, 0, n * m)
        } else {
            FqMatrix::from_rows(field, vectors).expect("vectors of equal length")
        };
        assert_eq!(stacked.cols(), n * m, "vector length");
        let red = stacked.rref();
        MatrixSpace {
            field: field.clone(),
            n,
            m,
            reduced: red.matrix.top_rows(red.rank),
            pivots: red.pivots,
        }
    }

    pub fn zero(field: &Field, n: usize, m: usize) -> MatrixSpace {
        MatrixSpace::from_vectors(field, n, m, &[])
    }

    pub fn full(field: &Field, n: usize, m: usize) -> MatrixSpace {
        let id = FqMatrix::identity(field, n * m);
        MatrixSpace {
            field: field.clone(),
            n,
            m,
            reduced: id,
            pivots: (0..n * m).collect(),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.n, self.m)
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Canonical basis as matrices.
    pub fn basis(&self) -> Vec<FqMatrix> {
        (0..self.dim())
            .map(|i| FqMatrix::from_vector(&self.field, self.n, self.m, self.reduced.row(i)))
            .collect()
    }

    /// Canonical basis as a `dim × nm` matrix in reduced row-echelon form.
    pub fn basis_matrix(&self) -> &FqMatrix {
        &self.reduced
    }

    /// Echelon view of the basis, for repeated membership tests.
    pub fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(&self.field, self.n * self.m);
        for i in 0..self.dim() {
            e.insert(self.reduced.row(i));
        }
        e
    }

    /// Membership test.
    pub fn contains(&self, a: &FqMatrix) -> Result<bool, LinAlgError> {
        if a.field() != &self.field {
            return Err(LinAlgError::FieldMismatch);
        }
        if a.shape() != (self.n, self.m) {
            return Err(LinAlgError::ShapeMismatch {
                left: (self.n, self.m),
                right: a.shape(),
            });
        }
        Ok(self.contains_vector(a.data()))
    }

    pub fn contains_vector(&self, v: &[Elem]) -> bool {
        let f = &self.field;
        let mut r = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let c = r[pc];
            if c != 0 {
                for (x, &y) in r.iter_mut().zip(self.reduced.row(i)) {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        r.iter().all(|&x| x == 0)
    }

    /// True when every basis matrix of `self` lies in `other`.
    pub fn is_subspace_of(&self, other: &MatrixSpace) -> bool {
        self.shape() == other.shape()
            && self.field == other.field
            && (0..self.dim()).all(|i| other.contains_vector(self.reduced.row(i)))
    }

    /// Orthogonal complement under `Tr(A·Bᵗ)`: the null space of the stacked
    /// vectorized basis.
    pub fn dual(&self) -> MatrixSpace {
        let nm = self.n * self.m;
        let ns = if self.dim() == 0 {
            FqMatrix::identity(&self.field, nm)
        } else {
            self.reduced.null_space()
        };
        MatrixSpace::from_vectors(&self.field, self.n, self.m, &ns.to_rows())
    }

    /// `{L·B·N : B ∈ V}` for invertible `L` and `N`.
    pub fn transform(&self, left: &FqMatrix, right: &FqMatrix) -> Result<MatrixSpace, LinAlgError> {
        if left.shape() != (self.n, self.n) {
            return Err(LinAlgError::ShapeMismatch {
                left: (self.n, self.n),
                right: left.shape(),
            });
        }
        if right.shape() != (self.m, self.m) {
            return Err(LinAlgError::ShapeMismatch {
                left: (self.m, self.m),
                right: right.shape(),
            });
        }
        if !left.is_invertible() || !right.is_invertible() {
            return Err(LinAlgError::Singular);
        }
        let mats: Vec<FqMatrix> = self
            .basis()
            .iter()
            .map(|b| left.mul(b).mul(right))
            .collect();
        MatrixSpace::span(&self.field, self.n, self.m, &mats)
    }

    /// `V + W`.
    pub fn sum(&self, other: &MatrixSpace) -> MatrixSpace {
        let mut rows = self.reduced.to_rows();
        rows.extend(other.reduced.to_rows());
        MatrixSpace::from_vectors(&self.field, self.n, self.m, &rows)
    }

    /// `V ∩ W = (V^⊥ + W^⊥)^⊥`.
    pub fn intersection(&self, other: &MatrixSpace) -> MatrixSpace {
        self.dual().sum(&other.dual()).dual()
    }
}
