use perfbase_exactla::FqMatrix;
use perfbase_gf::{Elem, Field, Poly};

use crate::ConstructError;

/// Companion matrix `M` given by its bottom row `(a_1, …, a_m)`; the
/// characteristic polynomial is `x^m − a_m x^{m−1} − ⋯ − a_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompanionSpec {
    field: Field,
    bottom: Vec<Elem>,
}

impl CompanionSpec {
    pub fn new(field: &Field, bottom: Vec<Elem>) -> Result<CompanionSpec, ConstructError> {
        if bottom.len() < 2 {
            return Err(ConstructError::BadDimension(bottom.len()));
        }
        if let Some(&bad) = bottom.iter().find(|&&a| !field.contains(a as u64)) {
            return Err(perfbase_exactla::LinAlgError::BadEntry(bad as u64).into());
        }
        Ok(CompanionSpec {
            field: field.clone(),
            bottom,
        })
    }

    /// Spec from signed integers reduced into the field.
    pub fn from_ints(field: &Field, bottom: &[i64]) -> Result<CompanionSpec, ConstructError> {
        CompanionSpec::new(field, bottom.iter().map(|&a| field.from_int(a)).collect())
    }

    /// Spec whose characteristic polynomial is the monic `poly`.
    pub fn from_poly(field: &Field, poly: &Poly) -> Result<CompanionSpec, ConstructError> {
        let m = poly.degree();
        if m < 2 {
            return Err(ConstructError::BadDimension(m.max(0) as usize));
        }
        let monic = poly.monic(field);
        CompanionSpec::new(
            field,
            (0..m as usize).map(|i| field.neg(monic.coeff(i))).collect(),
        )
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn m(&self) -> usize {
        self.bottom.len()
    }

    pub fn bottom(&self) -> &[Elem] {
        &self.bottom
    }

    /// `a_i` with 1-based `i`.
    pub fn a(&self, i: usize) -> Elem {
        self.bottom[i - 1]
    }

    pub fn matrix(&self) -> FqMatrix {
        let m = self.m();
        FqMatrix::from_fn(&self.field, m, m, |i, j| {
            if i + 1 < m {
                (j == i + 1) as Elem
            } else {
                self.bottom[j]
            }
        })
    }

    pub fn charpoly(&self) -> Poly {
        let mut coeffs: Vec<Elem> = self.bottom.iter().map(|&a| self.field.neg(a)).collect();
        coeffs.push(1);
        Poly::new(coeffs)
    }

    pub fn is_invertible(&self) -> bool {
        self.bottom[0] != 0
    }

    /// Least 1-based `i` with `a_i ≠ 0`, or `m + 1` when the row is zero.
    pub fn leading_index(&self) -> usize {
        self.bottom
            .iter()
            .position(|&a| a != 0)
            .map_or(self.m() + 1, |i| i + 1)
    }

    /// `M^e` for any integer `e`.
    pub fn power(&self, e: i64) -> Result<FqMatrix, ConstructError> {
        if e < 0 && !self.is_invertible() {
            return Err(ConstructError::SingularM);
        }
        Ok(self.matrix().pow(e)?)
    }
}

/// Companion matrix of `spec`.
pub fn companion(spec: &CompanionSpec) -> FqMatrix {
    spec.matrix()
}

/// Cyclic shift `J` with `J·e_k = e_{k+1}` (indices mod `m`).
pub fn shift_j(field: &Field, m: usize) -> FqMatrix {
    FqMatrix::from_fn(field, m, m, |i, j| (i == (j + 1) % m) as Elem)
}

/// Rank-one `E(γ)`: first row `(γ^{m−1}, …, γ, 1)`, second row `−γ` times
/// the first, zero elsewhere.
pub fn epsilon(field: &Field, gamma: Elem, m: usize) -> Result<FqMatrix, ConstructError> {
    if gamma == 0 {
        return Err(ConstructError::ZeroGamma);
    }
    if m < 2 {
        return Err(ConstructError::BadDimension(m));
    }
    let first: Vec<Elem> = (0..m)
        .map(|j| field.pow(gamma, (m - 1 - j) as u64))
        .collect();
    let ng = field.neg(gamma);
    Ok(FqMatrix::from_fn(field, m, m, |i, j| match i {
        0 => first[j],
        1 => field.mul(ng, first[j]),
        _ => 0,
    }))
}

/// `Y_n = (I_n | 0)` of shape `n × m`.
pub fn y_n(field: &Field, n: usize, m: usize) -> FqMatrix {
    FqMatrix::from_fn(field, n, m, |i, j| (i == j) as Elem)
}

/// `poly(mat)` by Horner's rule.
pub fn poly_at_matrix(field: &Field, poly: &Poly, mat: &FqMatrix) -> FqMatrix {
    let n = mat.rows();
    let id = FqMatrix::identity(field, n);
    poly.coeffs()
        .iter()
        .rev()
        .fold(FqMatrix::zeros(field, n, n), |acc, &c| {
            acc.mul(mat).add(&id.scale(c))
        })
}

/// Ordered set `(1, γ_1, …, γ_{s−1})` of distinct nonzero elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaSet {
    elems: Vec<Elem>,
}

impl GammaSet {
    pub fn new(field: &Field, elems: Vec<Elem>) -> Result<GammaSet, ConstructError> {
        if elems.first() != Some(&1) {
            return Err(ConstructError::BadGammaSet(
                "first element must be 1".into(),
            ));
        }
        for (i, &g) in elems.iter().enumerate() {
            if g == 0 || !field.contains(g as u64) {
                return Err(ConstructError::BadGammaSet(format!(
                    "{g} is not a nonzero field element"
                )));
            }
            if elems[..i].contains(&g) {
                return Err(ConstructError::BadGammaSet(format!("{g} repeated")));
            }
        }
        Ok(GammaSet { elems })
    }

    /// The `s` smallest nonzero elements in canonical order.
    pub fn smallest(field: &Field, s: usize) -> Result<GammaSet, ConstructError> {
        if s as u64 + 1 > field.order() as u64 {
            return Err(ConstructError::FieldTooSmall {
                needed: s as u64 + 1,
                order: field.order(),
            });
        }
        GammaSet::new(field, field.nonzero().take(s).collect())
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elems
    }
}
