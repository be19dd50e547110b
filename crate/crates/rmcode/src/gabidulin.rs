use perfbase_exactla::FqMatrix;
use perfbase_gf::{gcd_u64, Elem, Field};

use crate::gamma::frobenius_pow;
use crate::{RmError, VectorCode};

/// `Σ_i f_i·x^{q^{s·i}}` over `F_{q^m}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearizedPoly {
    coeffs: Vec<Elem>,
    s: u32,
}

impl LinearizedPoly {
    pub fn new(coeffs: Vec<Elem>, s: u32) -> LinearizedPoly {
        LinearizedPoly { coeffs, s }
    }

    /// `x^{q^{s·i}}`.
    pub fn monomial(i: usize, s: u32) -> LinearizedPoly {
        let mut coeffs = vec![0; i + 1];
        coeffs[i] = 1;
        LinearizedPoly { coeffs, s }
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    /// `q`-exponents `q^{s·i}` paired with the coefficients.
    pub fn exponents(&self, q: u64) -> Vec<u64> {
        (0..self.coeffs.len())
            .map(|i| q.pow(self.s * i as u32))
            .collect()
    }

    /// Evaluation at `x` by iterated Frobenius.
    pub fn eval(&self, ext: &Field, x: Elem) -> Elem {
        let mut power = x;
        let mut acc = 0;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                power = frobenius_pow(ext, power, self.s);
            }
            acc = ext.add(acc, ext.mul(c, power));
        }
        acc
    }
}

/// Generalized twisted Gabidulin code `{(f(u_1), …, f(u_n)) : f ∈ G_{k,s}(η)}`
/// where `G_{k,s}(η) = {Σ_{i<k} f_i x^{q^{si}} + η f_0 x^{q^{sk}}}`.
///
/// The generators are the evaluations of `x + η·x^{q^{sk}}` and
/// `x^{q^{si}}` for `1 ≤ i < k`.
pub fn gabidulin(
    ext: &Field,
    points: &[Elem],
    k: usize,
    s: u32,
    eta: Elem,
) -> Result<VectorCode, RmError> {
    let base = ext
        .base()
        .ok_or_else(|| RmError::NotAnExtension(ext.name()))?;
    let n = points.len();
    let m = ext.degree();
    if k == 0 || k >= n {
        return Err(RmError::BadParameter(format!(
            "need 1 <= k < n, got k={k}, n={n}"
        )));
    }
    if s == 0 || gcd_u64(s as u64, m as u64) != 1 {
        return Err(RmError::NotCoprime { s, m });
    }
    if !ext.contains(eta as u64) {
        return Err(perfbase_exactla::LinAlgError::BadEntry(eta as u64).into());
    }
    let digits: Vec<Vec<Elem>> = points.iter().map(|&u| ext.digits(u)).collect();
    if FqMatrix::from_rows(base, &digits)?.rank() != n {
        return Err(RmError::DependentBasis);
    }
    // With gcd(s, m) = 1 the norm from F_{q^{ms}} to F_{q^s} restricts to
    // the norm from F_{q^m} to F_q.
    let norm = ext.norm(eta, base.order() as u64)?;
    let sign = if (m as usize * k) % 2 == 0 {
        1
    } else {
        ext.neg(1)
    };
    if norm == sign {
        return Err(RmError::BadEta);
    }

    let mut twisted = vec![0; k + 1];
    twisted[0] = 1;
    twisted[k] = ext.add(twisted[k], eta);
    let mut polys = vec![LinearizedPoly::new(twisted, s)];
    polys.extend((1..k).map(|i| LinearizedPoly::monomial(i, s)));
    let rows = polys
        .iter()
        .map(|f| points.iter().map(|&u| f.eval(ext, u)).collect())
        .collect();
    VectorCode::new(ext, n, rows)
}
