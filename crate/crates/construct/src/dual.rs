use perfbase_exactla::{FqMatrix, MatrixSpace};
use perfbase_gf::{Elem, Field, Poly};

use crate::companion::{epsilon, shift_j, y_n, CompanionSpec, GammaSet};
use crate::{finish, prune, ConstructError, ConstructionResult};

fn check_powers(spec: &CompanionSpec, s: usize, gammas: &GammaSet) -> Result<(), ConstructError> {
    let m = spec.m();
    if s == 0 || s >= m {
        return Err(ConstructError::BadParameter(format!(
            "s = {s} must lie in 1..={}",
            m - 1
        )));
    }
    let order = spec.field().order();
    if s as u64 + 1 > order as u64 {
        return Err(ConstructError::FieldTooSmall {
            needed: s as u64 + 1,
            order,
        });
    }
    if gammas.len() != s {
        return Err(ConstructError::BadGammaSet(format!(
            "expected {s} elements, got {}",
            gammas.len()
        )));
    }
    if let Some(&g) = gammas
        .elements()
        .iter()
        .find(|&&g| !spec.field().contains(g as u64))
    {
        return Err(ConstructError::BadGammaSet(format!(
            "{g} is not a field element"
        )));
    }
    if !spec.is_invertible() {
        return Err(ConstructError::SingularM);
    }
    Ok(())
}

/// Members `Y_n·J^i·X·(M^{−i})ᵗ` of the dual-powers base, ordered by `i`;
/// for each `i` the `E(γ)` members (`i ≤ n−2`) precede the `E_{1,j}` ones
/// (`s < j ≤ m`, `i ≤ n−1`).
pub fn dual_powers_members(
    spec: &CompanionSpec,
    n: usize,
    s: usize,
    gammas: &GammaSet,
) -> Result<Vec<FqMatrix>, ConstructError> {
    check_powers(spec, s, gammas)?;
    let m = spec.m();
    if n < 2 || n > m {
        return Err(ConstructError::BadN(n));
    }
    let field = spec.field();
    let j = shift_j(field, m);
    let minv_t = spec.power(-1)?.transpose();
    let mut eps = Vec::with_capacity(s);
    for &g in gammas.elements() {
        eps.push(epsilon(field, g, m)?);
    }
    let units: Vec<FqMatrix> = (s..m).map(|c| FqMatrix::unit(field, m, m, 0, c)).collect();

    let mut out = Vec::with_capacity(n * m - s);
    let mut left = FqMatrix::identity(field, m);
    let mut right = FqMatrix::identity(field, m);
    for i in 0..n {
        let family = eps.iter().filter(|_| i + 2 <= n).chain(units.iter());
        for x in family {
            out.push(left.mul(x).mul(&right).top_rows(n));
        }
        left = j.mul(&left);
        right = right.mul(&minv_t);
    }
    Ok(out)
}

/// `⟨Y_n, Y_nM, …, Y_nM^{s−1}⟩^⊥` inside `K^{n×m}`.
fn powers_dual(spec: &CompanionSpec, n: usize, s: usize) -> Result<MatrixSpace, ConstructError> {
    let field = spec.field();
    let m = spec.m();
    let mut slices = Vec::with_capacity(s);
    let mut cur = y_n(field, n, m);
    let mat = spec.matrix();
    for _ in 0..s {
        slices.push(cur.clone());
        cur = cur.mul(&mat);
    }
    Ok(MatrixSpace::span(field, n, m, &slices)?.dual())
}

/// `(m²−s)`-base of `⟨I, M, …, M^{s−1}⟩^⊥` for invertible `M`.
pub fn base_dual_powers(
    spec: &CompanionSpec,
    s: usize,
    gammas: &GammaSet,
) -> Result<ConstructionResult, ConstructError> {
    let m = spec.m();
    let members = dual_powers_members(spec, m, s, gammas)?;
    finish(
        "dual-powers",
        members,
        powers_dual(spec, m, s)?,
        vec![("M".into(), spec.matrix())],
    )
}

/// `(nm−s)`-base of `⟨Y_n, Y_nM, …, Y_nM^{s−1}⟩^⊥` inside `K^{n×m}`.
pub fn base_dual_powers_rect(
    spec: &CompanionSpec,
    n: usize,
    s: usize,
    gammas: &GammaSet,
) -> Result<ConstructionResult, ConstructError> {
    let members = dual_powers_members(spec, n, s, gammas)?;
    finish(
        "dual-powers-rect",
        members,
        powers_dual(spec, n, s)?,
        vec![("M".into(), spec.matrix())],
    )
}

/// `(m²−s)`-base of `⟨B⁻¹, B⁻¹M, …, B⁻¹M^{s−1}⟩^⊥`, obtained as `Bᵗ·A`
/// over the dual-powers base `A`.
pub fn base_left_factor(
    spec: &CompanionSpec,
    s: usize,
    gammas: &GammaSet,
    left: &FqMatrix,
) -> Result<ConstructionResult, ConstructError> {
    let m = spec.m();
    if left.shape() != (m, m) {
        return Err(perfbase_exactla::LinAlgError::ShapeMismatch {
            left: left.shape(),
            right: (m, m),
        }
        .into());
    }
    let inv = left.inverse().map_err(|_| ConstructError::Singular)?;
    let lt = left.transpose();
    let members = dual_powers_members(spec, m, s, gammas)?
        .iter()
        .map(|a| lt.mul(a))
        .collect();
    let mat = spec.matrix();
    let mut slices = Vec::with_capacity(s);
    let mut cur = inv;
    for _ in 0..s {
        slices.push(cur.clone());
        cur = cur.mul(&mat);
    }
    let target = MatrixSpace::span(spec.field(), m, m, &slices)?.dual();
    finish(
        "left-factor",
        members,
        target,
        vec![("M".into(), mat), ("B".into(), left.clone())],
    )
}

/// Companion spec of `Jᵗ`.
fn shift_spec(field: &Field, m: usize) -> Result<CompanionSpec, ConstructError> {
    let mut bottom = vec![0; m];
    bottom[0] = 1;
    CompanionSpec::new(field, bottom)
}

fn embed_all(members: Vec<FqMatrix>, m: usize, offset: usize) -> impl Iterator<Item = FqMatrix> {
    members
        .into_iter()
        .map(move |a| a.embed(m, m, offset, offset))
}

/// Units `E_{m,j}` for `1 ≤ j ≤ m−2` together with the top `(m−1) × m`
/// dual-powers base for `Jᵗ` with `s = 2`.
fn corner_frame(field: &Field, m: usize) -> Result<Vec<FqMatrix>, ConstructError> {
    let jt = shift_spec(field, m)?;
    let mut out: Vec<FqMatrix> =
        dual_powers_members(&jt, m - 1, 2, &GammaSet::smallest(field, 2)?)?
            .into_iter()
            .map(|a| a.embed(m, m, 0, 0))
            .collect();
    out.extend((0..m - 2).map(|c| FqMatrix::unit(field, m, m, m - 1, c)));
    Ok(out)
}

/// `(m²−s)`-base of `⟨I, M, …, M^{s−1}⟩^⊥` when `M` may be singular.
///
/// With `i` the least index such that `a_i ≠ 0` the covered cases are
/// `1 ≤ s ≤ m−i`; `i = m−1`, `s = 2` when `a_{m−1}x² + a_m x − 1` has two
/// distinct roots; and `i = m` (or a zero bottom row) with `s = 1`, or
/// `i = m` with `s = 2`.
pub fn base_singular(spec: &CompanionSpec, s: usize) -> Result<ConstructionResult, ConstructError> {
    let field = spec.field();
    let m = spec.m();
    let lead = spec.leading_index();
    let order = field.order();
    let uncovered =
        || ConstructError::CaseNotCovered(format!("m = {m}, s = {s}, leading index {lead}"));
    if s == 0 {
        return Err(ConstructError::BadParameter("s must be positive".into()));
    }

    let members = if lead == 1 && s < m {
        base_dual_powers(spec, s, &GammaSet::smallest(field, s)?)?
            .base
            .members
    } else if (2..m).contains(&lead) && s <= m - lead {
        let gammas = GammaSet::smallest(field, s)?;
        let jt = shift_spec(field, m)?;
        let mut out: Vec<FqMatrix> = dual_powers_members(&jt, lead, s, &gammas)?
            .into_iter()
            .map(|a| a.embed(m, m, 0, 0))
            .collect();
        let tail = CompanionSpec::new(field, spec.bottom()[lead - 1..].to_vec())?;
        out.extend(embed_all(
            dual_powers_members(&tail, tail.m(), s, &gammas)?,
            m,
            lead - 1,
        ));
        for k in lead..m {
            out.extend((0..lead - 1).map(|c| FqMatrix::unit(field, m, m, k, c)));
        }
        out
    } else if lead + 1 == m && s == 2 {
        let quad = Poly::new(vec![field.neg(1), spec.a(m), spec.a(m - 1)]);
        let (roots, _) = quad.roots(field);
        if roots.len() != 2 || roots[0] == roots[1] {
            return Err(ConstructError::CaseNotCovered(format!(
                "{}x^2 + {}x - 1 lacks two distinct roots",
                spec.a(m - 1),
                spec.a(m)
            )));
        }
        let pair = vec![epsilon(field, roots[0], 2)?, epsilon(field, roots[1], 2)?];
        if m == 2 {
            pair
        } else {
            if order < 3 {
                return Err(ConstructError::FieldTooSmall { needed: 3, order });
            }
            let mut out = corner_frame(field, m)?;
            out.extend(embed_all(pair, m, m - 2));
            out
        }
    } else if lead >= m && s == 1 {
        base_dual_powers(&shift_spec(field, m)?, 1, &GammaSet::smallest(field, 1)?)?
            .base
            .members
    } else if lead == m && s == 2 {
        let inv = field.inv(spec.a(m));
        let pair = vec![
            FqMatrix::from_ints(field, &[&[0, 0], &[1, 0]]),
            FqMatrix::from_rows(
                field,
                &[
                    vec![inv, 1],
                    vec![field.neg(field.mul(inv, inv)), field.neg(inv)],
                ],
            )?,
        ];
        if m == 2 {
            pair
        } else {
            if order < 3 {
                return Err(ConstructError::FieldTooSmall { needed: 3, order });
            }
            let mut out = corner_frame(field, m)?;
            out.extend(embed_all(pair, m, m - 2));
            out
        }
    } else {
        return Err(uncovered());
    };

    let mut slices = Vec::with_capacity(s);
    let mat = spec.matrix();
    let mut cur = FqMatrix::identity(field, m);
    for _ in 0..s {
        slices.push(cur.clone());
        cur = cur.mul(&mat);
    }
    let target = MatrixSpace::span(field, m, m, &slices)?.dual();
    finish("singular", prune(members), target, vec![("M".into(), mat)])
}

/// `(n²+n−2)`-base of `⟨Y_n, Y_nM⟩^⊥` inside `K^{n×(n+1)}`, where
/// `Y_nM = (0 | I_n)`. Needs characteristic other than 2.
pub fn atkinson_base(field: &Field, n: usize) -> Result<ConstructionResult, ConstructError> {
    if n < 2 {
        return Err(ConstructError::BadN(n));
    }
    if field.characteristic() == 2 {
        return Err(ConstructError::CharTwo);
    }
    let m = n + 1;
    let one = 1;
    let minus = field.neg(1);
    let mut members = Vec::with_capacity(n * n + n - 2);
    for i in 0..n {
        for j in (0..m).filter(|&j| j != i && j != i + 1) {
            members.push(FqMatrix::unit(field, n, m, i, j));
        }
    }
    let block = |top: [Elem; 3], bottom: [Elem; 3], i: usize| {
        FqMatrix::from_fn(field, n, m, |r, c| {
            match (r.checked_sub(i), c.checked_sub(i)) {
                (Some(0), Some(k)) if k < 3 => top[k],
                (Some(1), Some(k)) if k < 3 => bottom[k],
                _ => 0,
            }
        })
    };
    for i in 0..n - 1 {
        members.push(block([one; 3], [minus; 3], i));
        members.push(block([one, minus, one], [one, minus, one], i));
    }
    let slices = [
        y_n(field, n, m),
        FqMatrix::from_fn(field, n, m, |r, c| (c == r + 1) as Elem),
    ];
    let target = MatrixSpace::span(field, n, m, &slices)?.dual();
    finish("atkinson", members, target, vec![])
}
