use std::fmt;

use perfbase_gf::{Elem, Field};

use crate::LinAlgError;

/// Dense `rows × cols` matrix over a finite field, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FqMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

/// Output of [`FqMatrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: FqMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl FqMatrix {
    /// Builds a matrix from row-major data, checking every entry.
    pub fn new(
        field: &Field,
        rows: usize,
        cols: usize,
        data: Vec<Elem>,
    ) -> Result<FqMatrix, LinAlgError> {
        if data.len() != rows * cols {
            return Err(LinAlgError::Ragged);
        }
        if let Some(&bad) = data.iter().find(|&&x| !field.contains(x as u64)) {
            return Err(LinAlgError::BadEntry(bad as u64));
        }
        Ok(FqMatrix {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    /// Builds a matrix from a list of rows.
    pub fn from_rows(field: &Field, rows: &[Vec<Elem>]) -> Result<FqMatrix, LinAlgError> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinAlgError::Ragged);
        }
        FqMatrix::new(field, rows.len(), cols, rows.concat())
    }

    /// Builds a matrix from signed integers reduced into the prime subfield.
    pub fn from_ints(field: &Field, rows: &[&[i64]]) -> FqMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let data = rows
            .iter()
            .flat_map(|r| r.iter().map(|&v| field.from_int(v)))
            .collect();
        FqMatrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_fn(
        field: &Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Elem,
    ) -> FqMatrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        FqMatrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn zeros(field: &Field, rows: usize, cols: usize) -> FqMatrix {
        FqMatrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> FqMatrix {
        FqMatrix::from_fn(field, n, n, |i, j| (i == j) as Elem)
    }

    /// Matrix unit with a single 1 at `(i, j)` (0-based).
    pub fn unit(field: &Field, rows: usize, cols: usize, i: usize, j: usize) -> FqMatrix {
        let mut a = FqMatrix::zeros(field, rows, cols);
        a.set(i, j, 1);
        a
    }

    /// Rank-one matrix `u · vᵗ`.
    pub fn outer(field: &Field, u: &[Elem], v: &[Elem]) -> FqMatrix {
        FqMatrix::from_fn(field, u.len(), v.len(), |i, j| field.mul(u[i], v[j]))
    }

    /// Reshapes a row-major vector into `rows × cols`.
    pub fn from_vector(field: &Field, rows: usize, cols: usize, v: &[Elem]) -> FqMatrix {
        assert_eq!(v.len(), rows * cols, "vector length");
        FqMatrix {
            field: field.clone(),
            rows,
            cols,
            data: v.to_vec(),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entries.
    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Row-major flattening `(a_11, …, a_1m, a_21, …, a_nm)`.
    pub fn vectorize(&self) -> Vec<Elem> {
        self.data.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    fn check_same(&self, other: &FqMatrix) -> Result<(), LinAlgError> {
        if self.field != other.field {
            return Err(LinAlgError::FieldMismatch);
        }
        if self.shape() != other.shape() {
            return Err(LinAlgError::ShapeMismatch {
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(())
    }

    pub fn transpose(&self) -> FqMatrix {
        FqMatrix::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Entrywise sum. Panics on shape or field mismatch.
    pub fn add(&self, other: &FqMatrix) -> FqMatrix {
        self.check_same(other).expect("add");
        let f = &self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        FqMatrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Entrywise difference. Panics on shape or field mismatch.
    pub fn sub(&self, other: &FqMatrix) -> FqMatrix {
        self.check_same(other).expect("sub");
        let f = &self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        FqMatrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn neg(&self) -> FqMatrix {
        let f = &self.field;
        FqMatrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.neg(a)).collect(),
        }
    }

    pub fn scale(&self, c: Elem) -> FqMatrix {
        let f = &self.field;
        FqMatrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    /// Matrix product, or an error on incompatible shapes.
    pub fn try_mul(&self, other: &FqMatrix) -> Result<FqMatrix, LinAlgError> {
        if self.field != other.field {
            return Err(LinAlgError::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(LinAlgError::ShapeMismatch {
                left: self.shape(),
                right: other.shape(),
            });
        }
        let f = &self.field;
        let mut out = vec![0; self.rows * other.cols];
        for i in 0..self.rows {
            let orow = &mut out[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for (o, &b) in orow.iter_mut().zip(other.row(k)) {
                    *o = f.add(*o, f.mul(a, b));
                }
            }
        }
        Ok(FqMatrix {
            field: f.clone(),
            rows: self.rows,
            cols: other.cols,
            data: out,
        })
    }

    /// Matrix product. Panics on incompatible shapes.
    pub fn mul(&self, other: &FqMatrix) -> FqMatrix {
        self.try_mul(other).expect("mul")
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.rows, "vector length");
        let f = &self.field;
        let mut out = vec![0; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (o, &b) in out.iter_mut().zip(self.row(k)) {
                *o = f.add(*o, f.mul(a, b));
            }
        }
        out
    }

    /// Integer power; negative exponents use the inverse.
    pub fn pow(&self, e: i64) -> Result<FqMatrix, LinAlgError> {
        if !self.is_square() {
            return Err(LinAlgError::ShapeMismatch {
                left: self.shape(),
                right: self.shape(),
            });
        }
        let mut base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = FqMatrix::identity(&self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn trace(&self) -> Elem {
        (0..self.rows.min(self.cols)).fold(0, |acc, i| self.field.add(acc, self.get(i, i)))
    }

    /// Reduced row-echelon form: leftmost pivots, rows scanned in order.
    pub fn rref(&self) -> Rref {
        let f = &self.field;
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(pr) = (r..a.rows).find(|&i| a.get(i, c) != 0) else {
                continue;
            };
            a.swap_rows(r, pr);
            let inv = f.inv(a.get(r, c));
            a.scale_row(r, inv);
            for i in 0..a.rows {
                let factor = a.get(i, c);
                if i != r && factor != 0 {
                    a.axpy_row(i, r, f.neg(factor));
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: a,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            for c in 0..self.cols {
                self.data.swap(i * self.cols + c, j * self.cols + c);
            }
        }
    }

    fn scale_row(&mut self, i: usize, s: Elem) {
        for c in 0..self.cols {
            let v = self.get(i, c);
            self.set(i, c, self.field.mul(v, s));
        }
    }

    /// Row `dst += s · row src`.
    fn axpy_row(&mut self, dst: usize, src: usize, s: Elem) {
        for c in 0..self.cols {
            let v = self
                .field
                .add(self.get(dst, c), self.field.mul(s, self.get(src, c)));
            self.set(dst, c, v);
        }
    }

    /// Inverse of a square matrix.
    pub fn inverse(&self) -> Result<FqMatrix, LinAlgError> {
        if !self.is_square() {
            return Err(LinAlgError::ShapeMismatch {
                left: self.shape(),
                right: self.shape(),
            });
        }
        let n = self.rows;
        let aug = FqMatrix::from_fn(&self.field, n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j)
            } else {
                (j - n == i) as Elem
            }
        });
        let red = aug.rref();
        if red.pivots.len() < n || red.pivots[n - 1] >= n {
            return Err(LinAlgError::Singular);
        }
        Ok(red.matrix.submatrix(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Basis of `{x : A x = 0}` as the rows of the result, one vector per free
    /// column in ascending order with a 1 in that column.
    pub fn null_space(&self) -> FqMatrix {
        let red = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !red.pivots.contains(c)).collect();
        let f = &self.field;
        let mut out = FqMatrix::zeros(f, free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.set(k, fc, 1);
            for (r, &pc) in red.pivots.iter().enumerate() {
                out.set(k, pc, f.neg(red.matrix.get(r, fc)));
            }
        }
        out
    }

    /// Basis of `{y : y A = 0}` as rows.
    pub fn left_null_space(&self) -> FqMatrix {
        self.transpose().null_space()
    }

    /// Copy of the block starting at `(r0, c0)`.
    pub fn submatrix(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> FqMatrix {
        FqMatrix::from_fn(&self.field, nr, nc, |i, j| self.get(r0 + i, c0 + j))
    }

    /// First `n` rows, i.e. `Y_n · A`.
    pub fn top_rows(&self, n: usize) -> FqMatrix {
        self.submatrix(0, 0, n, self.cols)
    }

    /// Copy of `self` with `block` written at `(r0, c0)`.
    pub fn with_block(&self, r0: usize, c0: usize, block: &FqMatrix) -> FqMatrix {
        let mut out = self.clone();
        for i in 0..block.rows {
            for j in 0..block.cols {
                out.set(r0 + i, c0 + j, block.get(i, j));
            }
        }
        out
    }

    /// `rows × cols` zero matrix carrying `self` at `(r0, c0)`.
    pub fn embed(&self, rows: usize, cols: usize, r0: usize, c0: usize) -> FqMatrix {
        FqMatrix::zeros(&self.field, rows, cols).with_block(r0, c0, self)
    }

    /// Block-diagonal matrix `diag(self, other)`.
    pub fn block_diag(&self, other: &FqMatrix) -> FqMatrix {
        FqMatrix::zeros(&self.field, self.rows + other.rows, self.cols + other.cols)
            .with_block(0, 0, self)
            .with_block(self.rows, self.cols, other)
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn vstack(&self, other: &FqMatrix) -> FqMatrix {
        assert_eq!(self.cols, other.cols, "vstack width");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        FqMatrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Diagonal matrix with the given entries.
    pub fn diag(field: &Field, entries: &[Elem]) -> FqMatrix {
        FqMatrix::from_fn(field, entries.len(), entries.len(), |i, j| {
            if i == j {
                entries[i]
            } else {
                0
            }
        })
    }
}

/// `Tr(A · Bᵗ)`, the dot product of the vectorizations.
pub fn trace_pair(a: &FqMatrix, b: &FqMatrix) -> Result<Elem, LinAlgError> {
    a.check_same(b)?;
    let f = &a.field;
    Ok(a.data
        .iter()
        .zip(&b.data)
        .fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y))))
}

impl fmt::Debug for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            write!(f, "\n  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

impl fmt::Display for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}
