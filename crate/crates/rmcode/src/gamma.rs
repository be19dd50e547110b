use perfbase_construct::CompanionSpec;
use perfbase_exactla::{FqMatrix, LinAlgError, MatrixSpace};
use perfbase_gf::{Elem, Field};

use crate::{RankCode, RmError, VectorCode};

/// Ordered basis `(γ_1, …, γ_m)` of `F_{q^m}` over its base field `F_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaBasis {
    ext: Field,
    base: Field,
    elems: Vec<Elem>,
    /// Rows are the base-field digits of the basis elements.
    digits: FqMatrix,
    digits_inv: FqMatrix,
    /// `θ` when the basis is `1, θ, …, θ^{m−1}`.
    generator: Option<Elem>,
}

impl GammaBasis {
    pub fn new(ext: &Field, elems: Vec<Elem>) -> Result<GammaBasis, RmError> {
        let base = ext
            .base()
            .ok_or_else(|| RmError::NotAnExtension(ext.name()))?
            .clone();
        let m = ext.degree() as usize;
        if elems.len() != m {
            return Err(RmError::BadParameter(format!(
                "basis needs {m} elements, got {}",
                elems.len()
            )));
        }
        if let Some(&bad) = elems.iter().find(|&&e| !ext.contains(e as u64)) {
            return Err(LinAlgError::BadEntry(bad as u64).into());
        }
        let rows: Vec<Vec<Elem>> = elems.iter().map(|&e| ext.digits(e)).collect();
        let digits = FqMatrix::from_rows(&base, &rows)?;
        let digits_inv = digits.inverse().map_err(|_| RmError::DependentBasis)?;
        Ok(GammaBasis {
            ext: ext.clone(),
            base,
            elems,
            digits,
            digits_inv,
            generator: None,
        })
    }

    /// Power basis `1, θ, …, θ^{m−1}`.
    pub fn power_basis(ext: &Field, theta: Elem) -> Result<GammaBasis, RmError> {
        let m = ext.degree() as u64;
        let elems = (0..m).map(|i| ext.pow(theta, i)).collect();
        let mut basis = GammaBasis::new(ext, elems)?;
        basis.generator = Some(theta);
        Ok(basis)
    }

    /// Power basis of the canonical primitive element of `ext`.
    pub fn primitive(ext: &Field) -> Result<GammaBasis, RmError> {
        GammaBasis::power_basis(ext, ext.primitive())
    }

    /// Primitive power basis of a fresh degree-`m` extension of `base`.
    pub fn over(base: &Field, m: usize) -> Result<GammaBasis, RmError> {
        let ext = Field::extension(base, m as u32, None)?;
        GammaBasis::primitive(&ext)
    }

    pub fn ext(&self) -> &Field {
        &self.ext
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn m(&self) -> usize {
        self.elems.len()
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elems
    }

    pub fn generator(&self) -> Option<Elem> {
        self.generator
    }

    /// `Γ(θ)`: coordinates of `θ` in this basis.
    pub fn coords(&self, theta: Elem) -> Vec<Elem> {
        self.digits_inv.vec_mul(&self.ext.digits(theta))
    }

    /// Inverse of [`GammaBasis::coords`].
    pub fn element(&self, coords: &[Elem]) -> Elem {
        self.ext.from_digits(&self.digits.vec_mul(coords))
    }

    /// Matrix of multiplication by `θ`: `Γ(xθ) = Γ(x)·mult_matrix(θ)`.
    pub fn mult_matrix(&self, theta: Elem) -> FqMatrix {
        let rows: Vec<Vec<Elem>> = self
            .elems
            .iter()
            .map(|&g| self.coords(self.ext.mul(g, theta)))
            .collect();
        FqMatrix::from_rows(&self.base, &rows).expect("square coordinate rows")
    }

    /// Matrix of `x ↦ x^{q^ℓ}`: `Γ(x^{q^ℓ}) = Γ(x)·frobenius_matrix(ℓ)`.
    pub fn frobenius_matrix(&self, power: u32) -> FqMatrix {
        let rows: Vec<Vec<Elem>> = self
            .elems
            .iter()
            .map(|&g| self.coords(frobenius_pow(&self.ext, g, power)))
            .collect();
        FqMatrix::from_rows(&self.base, &rows).expect("square coordinate rows")
    }

    /// Companion matrix of the generator's minimal polynomial, i.e. the
    /// matrix of multiplication by the generator. `None` unless this is a
    /// power basis of degree at least 2.
    pub fn companion(&self) -> Option<CompanionSpec> {
        let theta = self.generator?;
        let top = self.ext.pow(theta, self.m() as u64);
        CompanionSpec::new(&self.base, self.coords(top)).ok()
    }
}

/// `x^{q^power}` by repeated relative Frobenius.
pub(crate) fn frobenius_pow(ext: &Field, x: Elem, power: u32) -> Elem {
    (0..power).fold(x, |acc, _| ext.frobenius(acc))
}

/// `Γ(v)`: the `n × m` matrix whose `j`-th row is `Γ(v_j)`.
pub fn gamma_expand(v: &[Elem], gamma: &GammaBasis) -> Result<FqMatrix, RmError> {
    if let Some(&bad) = v.iter().find(|&&x| !gamma.ext.contains(x as u64)) {
        return Err(LinAlgError::BadEntry(bad as u64).into());
    }
    let rows: Vec<Vec<Elem>> = v.iter().map(|&x| gamma.coords(x)).collect();
    if rows.is_empty() {
        return Ok(FqMatrix::zeros(&gamma.base, 0, gamma.m()));
    }
    Ok(FqMatrix::from_rows(&gamma.base, &rows)?)
}

/// `Γ(C) = ⟨Γ(γ_i·g) : γ_i ∈ Γ, g a generator of C⟩`, of `F_q`-dimension
/// `m·dim(C)`.
pub fn gamma_expand_code(code: &VectorCode, gamma: &GammaBasis) -> Result<RankCode, RmError> {
    if code.field() != gamma.ext() {
        return Err(RmError::FieldMismatch);
    }
    let ext = gamma.ext();
    let mut mats = Vec::with_capacity(code.dim() * gamma.m());
    for g in code.generators() {
        for &scalar in gamma.elements() {
            let scaled: Vec<Elem> = g.iter().map(|&x| ext.mul(scalar, x)).collect();
            mats.push(gamma_expand(&scaled, gamma)?);
        }
    }
    let space = MatrixSpace::span(gamma.base(), code.len(), gamma.m(), &mats)?;
    Ok(RankCode::new(space))
}
