use perfbase_exactla::{FqMatrix, MatrixSpace};
use perfbase_gf::{Elem, Field, Poly};

use crate::companion::{y_n, CompanionSpec};
use crate::{finish, prune, ConstructError, ConstructionResult};

type Aux = Vec<(String, FqMatrix)>;

/// `V[k][i] = roots[i]^k`: its columns are right eigenvectors of the
/// companion matrix of `∏(x − roots[i])`.
fn vandermonde(field: &Field, roots: &[Elem], rows: usize) -> FqMatrix {
    FqMatrix::from_fn(field, rows, roots.len(), |k, i| {
        field.pow(roots[i], k as u64)
    })
}

/// Rank-one projectors `V·E_{ii}·V⁻¹`.
fn projectors(cols: &FqMatrix, rows: &FqMatrix) -> Vec<FqMatrix> {
    let field = cols.field();
    let ct = cols.transpose();
    (0..rows.rows())
        .map(|i| FqMatrix::outer(field, ct.row(i), rows.row(i)))
        .collect()
}

fn coeff_row(poly: &Poly, m: usize) -> Vec<Elem> {
    (0..m).map(|i| poly.coeff(i)).collect()
}

/// Linear roots (ascending) and rootless cofactor; repeated roots rejected.
fn split_charpoly(spec: &CompanionSpec) -> Result<(Vec<Elem>, Poly), ConstructError> {
    let (roots, cofactor) = spec.charpoly().roots(spec.field());
    if roots.windows(2).any(|w| w[0] == w[1]) {
        return Err(ConstructError::RepeatedRoot);
    }
    Ok((roots, cofactor))
}

/// The `count` smallest elements outside `avoid ∪ {0}`; `0` is admitted
/// only when `allow_zero` is set and the nonzero candidates run out.
fn pick_roots(field: &Field, avoid: &[Elem], count: usize, allow_zero: bool) -> Option<Vec<Elem>> {
    let fresh = |x: &Elem| !avoid.contains(x);
    let mut picked: Vec<Elem> = field.nonzero().filter(fresh).take(count).collect();
    if picked.len() < count && allow_zero && fresh(&0) {
        picked.insert(0, 0);
    }
    (picked.len() == count).then_some(picked)
}

/// Members `P⁻¹Q⁻¹E_{ii}QP`, `P⁻¹D₁P` and (for `r ≥ 3`) `P⁻¹D₂P`, where
/// `PMP⁻¹ = diag(α) ⊕ M_g` and `Q = I ⊕ Q₁` diagonalizes `M_h`.
fn inverse_core(spec: &CompanionSpec) -> Result<(Vec<FqMatrix>, Aux), ConstructError> {
    if !spec.is_invertible() {
        return Err(ConstructError::SingularM);
    }
    let field = spec.field();
    let m = spec.m();
    let f = spec.charpoly();
    let (alphas, g) = split_charpoly(spec)?;
    let r = g.degree().max(0) as usize;
    if r == 0 {
        let p_inv = vandermonde(field, &alphas, m);
        let p = p_inv.inverse()?;
        return Ok((projectors(&p_inv, &p), vec![("P".into(), p)]));
    }

    let mut rows: Vec<Vec<Elem>> = alphas
        .iter()
        .map(|&a| coeff_row(&f.div_rem(field, &Poly::linear(field, a)).0, m))
        .collect();
    let linear_part = Poly::from_roots(field, &alphas);
    let mut shifted = linear_part;
    for _ in 0..r {
        rows.push(coeff_row(&shifted, m));
        shifted = shifted.mul(field, &Poly::x());
    }
    let p = FqMatrix::from_rows(field, &rows)?;
    let p_inv = p.inverse()?;

    let betas = pick_roots(field, &alphas, r, r == 2).ok_or(ConstructError::FieldTooSmall {
        needed: if r == 2 { m as u64 } else { m as u64 + 1 },
        order: field.order(),
    })?;
    let mg = CompanionSpec::from_poly(field, &g)?.matrix();
    let mh = CompanionSpec::from_poly(field, &Poly::from_roots(field, &betas))?.matrix();
    let q1_inv = vandermonde(field, &betas, r);
    let q1 = q1_inv.inverse()?;
    let id = FqMatrix::identity(field, m - r);
    let q = id.block_diag(&q1);
    let q_inv = id.block_diag(&q1_inv);

    let mut members = projectors(&p_inv.mul(&q_inv), &q.mul(&p));
    let zero = FqMatrix::zeros(field, m - r, m - r);
    let d1 = zero.block_diag(&mg.sub(&mh));
    members.push(p_inv.mul(&d1).mul(&p));
    let mut aux: Aux = vec![
        ("P".into(), p.clone()),
        ("Q".into(), q),
        ("M_g".into(), mg.clone()),
        ("M_h".into(), mh.clone()),
    ];
    aux.push(("D1".into(), d1));
    if r >= 3 {
        let d2 = zero.block_diag(&mg.inverse()?.sub(&mh.inverse()?));
        members.push(p_inv.mul(&d2).mul(&p));
        aux.push(("D2".into(), d2));
    }
    Ok((members, aux))
}

/// Base of the slice space of `(I | M | M⁻¹ | M^{e_1} | …)`.
///
/// The size is `m` when the characteristic polynomial splits into distinct
/// linear factors, `m+1` for a rootless cofactor of degree 2, and `m+2`
/// otherwise. Exponents outside `{−1, 0, 1}` need cofactor degree at most 3.
pub fn base_inverse_family(
    spec: &CompanionSpec,
    extra_powers: &[i64],
) -> Result<ConstructionResult, ConstructError> {
    if !spec.is_invertible() {
        return Err(ConstructError::SingularM);
    }
    let (_, g) = split_charpoly(spec)?;
    let r = g.degree().max(0) as usize;
    if r >= 4 && extra_powers.iter().any(|e| !(-1..=1).contains(e)) {
        return Err(ConstructError::UnsupportedCofactorDegree(r));
    }
    let (members, aux) = inverse_core(spec)?;
    let mut slices = vec![spec.power(0)?, spec.power(1)?, spec.power(-1)?];
    for &e in extra_powers {
        slices.push(spec.power(e)?);
    }
    let m = spec.m();
    let target = MatrixSpace::span(spec.field(), m, m, &slices)?;
    finish("inverse-family", members, target, aux)
}

/// Base of the slice space of `(L·Y_n·M^j·N)_{j=−1}^{m−2}` for `n ∈ {2, 3}`.
pub fn base_rect_small_n(
    spec: &CompanionSpec,
    n: usize,
    left: &FqMatrix,
    right: &FqMatrix,
) -> Result<ConstructionResult, ConstructError> {
    let field = spec.field();
    let m = spec.m();
    if !(2..=3).contains(&n) || n > m {
        return Err(ConstructError::BadN(n));
    }
    for (mat, size) in [(left, n), (right, m)] {
        if mat.shape() != (size, size) {
            return Err(perfbase_exactla::LinAlgError::ShapeMismatch {
                left: mat.shape(),
                right: (size, size),
            }
            .into());
        }
        if !mat.is_invertible() {
            return Err(ConstructError::Singular);
        }
    }
    if !spec.is_invertible() {
        return Err(ConstructError::SingularM);
    }
    let (mut alphas, g) = spec.charpoly().roots(field);
    let distinct = !alphas.windows(2).any(|w| w[0] == w[1]);
    let r = g.degree().max(0) as usize;

    let (cores, aux) = if distinct && r <= 2 {
        let (members, aux) = inverse_core(spec)?;
        (
            members
                .into_iter()
                .map(|a| a.top_rows(n))
                .collect::<Vec<_>>(),
            aux,
        )
    } else {
        alphas.dedup();
        let fill = pick_roots(field, &alphas, m - alphas.len(), n == 2).ok_or(
            ConstructError::FieldTooSmall {
                needed: if n == 2 { m as u64 } else { m as u64 + 1 },
                order: field.order(),
            },
        )?;
        let mut betas = alphas;
        betas.extend(fill);
        betas.sort_unstable();
        let h = CompanionSpec::from_poly(field, &Poly::from_roots(field, &betas))?;
        let mh = h.matrix();
        let v = vandermonde(field, &betas, m);
        let mut cores: Vec<FqMatrix> = projectors(&v, &v.inverse()?)
            .into_iter()
            .map(|a| a.top_rows(n))
            .collect();
        let d1 = if h.is_invertible() {
            spec.power(-1)?.sub(&h.power(-1)?)
        } else {
            spec.power(m as i64 - 1)?.sub(&h.power(m as i64 - 1)?)
        }
        .top_rows(n);
        cores.push(d1.clone());
        let mut aux: Aux = vec![("M_h".into(), mh), ("D1".into(), d1)];
        if n == 3 {
            let d2 = spec
                .power(m as i64 - 2)?
                .sub(&h.power(m as i64 - 2)?)
                .top_rows(n);
            cores.push(d2.clone());
            aux.push(("D2".into(), d2));
        }
        (cores, aux)
    };

    let members = prune(cores.iter().map(|c| left.mul(c).mul(right)).collect());
    let yl = left.mul(&y_n(field, n, m));
    let mut slices = Vec::with_capacity(m);
    for j in -1..=(m as i64 - 2) {
        slices.push(yl.mul(&spec.power(j)?).mul(right));
    }
    let target = MatrixSpace::span(field, n, m, &slices)?;
    finish("rect-small-n", members, target, aux)
}
