use perfbase_construct::{base_dual_powers_rect, ConstructionResult, GammaSet};
use perfbase_exactla::{Echelon, FqMatrix, LinAlgError, MatrixSpace};
use perfbase_gf::{Elem, Poly};
use perfbase_tensor3::{kruskal_bound, verify_base, BaseCandidate};

use crate::gamma::frobenius_pow;
use crate::{
    dual_code, field_of_order, gamma_expand_code, solve_left, GammaBasis, RankCode, RmError,
    VectorCode,
};

fn checked(members: Vec<FqMatrix>, code: &RankCode) -> Result<BaseCandidate, RmError> {
    let cand = BaseCandidate::new(members, code.space().clone());
    match verify_base(&cand)?.failure() {
        None => Ok(cand),
        Some(why) => Err(RmError::InvalidWitness(why)),
    }
}

fn generator_of(gamma: &GammaBasis) -> Result<Elem, RmError> {
    gamma
        .generator()
        .ok_or_else(|| RmError::BadParameter("a power basis is required".into()))
}

/// `Γ(⟨(1, α, …, α^{t−1})⟩)` for the generator `α` of the power basis
/// `gamma`, with an interpolation base of size `m + t − 1`.
///
/// Codewords are `[x^i·p mod f]_{i<t}` for `deg p < m`, where `f` is the
/// minimal polynomial of `α`. Interpolating `x^i·p` at `m + t − 1` points
/// (the point at infinity reads off the top coefficient) writes every
/// codeword as a combination of the rank-one members `u_k·w_kᵗ`, with
/// `u_k = (1, t_k, …, t_k^{t−1})` and `w_k` the Lagrange basis polynomial
/// reduced mod `f`. Needs `q ≥ m + t − 2`.
pub fn power_code_witness(
    gamma: &GammaBasis,
    t: usize,
) -> Result<(RankCode, BaseCandidate), RmError> {
    let alpha = generator_of(gamma)?;
    let (ext, base) = (gamma.ext(), gamma.base());
    let m = gamma.m();
    if t == 0 || t > m {
        return Err(RmError::BadParameter(format!(
            "need 1 <= t <= {m}, got {t}"
        )));
    }
    let q = base.order() as usize;
    let needed = m + t - 1;
    let with_infinity = match needed.cmp(&(q + 1)) {
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => true,
        std::cmp::Ordering::Greater => {
            return Err(RmError::FieldTooSmall {
                needed: (m + t - 2) as u64,
                order: base.order(),
            })
        }
    };
    let finite: Vec<Elem> = base.elements().take(needed.min(q)).collect();

    let top = gamma.coords(ext.pow(alpha, m as u64));
    let mut fcoeffs: Vec<Elem> = top.iter().map(|&c| base.neg(c)).collect();
    fcoeffs.push(1);
    let minpoly = Poly::new(fcoeffs);
    let reduced = |p: &Poly| -> Vec<Elem> {
        let r = p.rem(base, &minpoly);
        (0..m).map(|i| r.coeff(i)).collect()
    };

    let mut members = Vec::with_capacity(needed);
    for (k, &tk) in finite.iter().enumerate() {
        let others: Vec<Elem> = finite
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, &tj)| tj)
            .collect();
        let denom = others
            .iter()
            .fold(1, |acc, &tj| base.mul(acc, base.sub(tk, tj)));
        let lagrange = Poly::from_roots(base, &others).scale(base, base.inv(denom));
        let u: Vec<Elem> = (0..t).map(|i| base.pow(tk, i as u64)).collect();
        members.push(FqMatrix::outer(base, &u, &reduced(&lagrange)));
    }
    if with_infinity {
        let mut u = vec![0; t];
        u[t - 1] = 1;
        let w = reduced(&Poly::from_roots(base, &finite));
        members.push(FqMatrix::outer(base, &u, &w));
    }

    let powers = (0..t).map(|i| ext.pow(alpha, i as u64)).collect();
    let code = gamma_expand_code(&VectorCode::new(ext, t, vec![powers])?, gamma)?;
    let cand = checked(members, &code)?;
    Ok((code, cand))
}

/// `Γ(⟨v⟩)` for a single vector `v` whose entries span `λ·σ(⟨1, …, α^{t−1}⟩)`
/// for some scalar `λ` and Frobenius power `σ`, with a base of size
/// `m + t − 1` transported from [`power_code_witness`].
///
/// Every hyperplane of `F_{q^m}` has this form when `m` is prime, and the
/// whole field always does. Other spans give [`RmError::NotCovered`].
pub fn one_dim_witness(
    gamma: &GammaBasis,
    v: &[Elem],
) -> Result<(RankCode, BaseCandidate), RmError> {
    let alpha = generator_of(gamma)?;
    let (ext, base) = (gamma.ext(), gamma.base());
    let m = gamma.m();
    let n = v.len();
    if v.iter().all(|&x| x == 0) {
        let code = RankCode::new(MatrixSpace::zero(base, n, m));
        return Ok((
            code.clone(),
            BaseCandidate::new(Vec::new(), code.space().clone()),
        ));
    }
    let code = gamma_expand_code(&VectorCode::new(ext, n, vec![v.to_vec()])?, gamma)?;
    let v_digits: Vec<Vec<Elem>> = v.iter().map(|&x| ext.digits(x)).collect();
    let t = FqMatrix::from_rows(base, &v_digits)?.rank();

    let powers: Vec<Elem> = (0..t).map(|i| ext.pow(alpha, i as u64)).collect();
    let found = (0..m as u32).find_map(|ell| {
        let twisted: Vec<Elem> = powers.iter().map(|&p| frobenius_pow(ext, p, ell)).collect();
        ext.nonzero().find_map(|lambda| {
            let rows: Vec<Vec<Elem>> = twisted
                .iter()
                .map(|&w| ext.digits(ext.mul(lambda, w)))
                .collect();
            let span = FqMatrix::from_rows(base, &rows).expect("digit rows");
            let coeffs: Option<Vec<Vec<Elem>>> =
                v_digits.iter().map(|d| solve_left(&span, d)).collect();
            coeffs.map(|c| (ell, c))
        })
    });
    let (ell, coeffs) = found.ok_or_else(|| {
        RmError::NotCovered(format!(
            "entry span of dimension {t} is not a scaled Frobenius image of a power span"
        ))
    })?;

    let transfer = FqMatrix::from_rows(base, &coeffs)?;
    let frob = gamma.frobenius_matrix(ell);
    let (_, core) = power_code_witness(gamma, t)?;
    let members = core
        .members
        .iter()
        .map(|a| transfer.mul(a).mul(&frob))
        .collect();
    let cand = checked(members, &code)?;
    Ok((code, cand))
}

/// Appends the rows `λ·A` below every member `A` of `base_s` and below every
/// target basis matrix. Rank-one members stay rank one.
pub fn extend_base_lindep(
    base_s: &BaseCandidate,
    lambdas: &FqMatrix,
) -> Result<BaseCandidate, RmError> {
    let (s, m) = base_s.target.shape();
    if lambdas.cols() != s {
        return Err(LinAlgError::ShapeMismatch {
            left: lambdas.shape(),
            right: (lambdas.rows(), s),
        }
        .into());
    }
    let extend = |a: &FqMatrix| -> Result<FqMatrix, RmError> {
        if lambdas.rows() == 0 {
            return Ok(a.clone());
        }
        Ok(a.vstack(&lambdas.try_mul(a)?))
    };
    let members = base_s
        .members
        .iter()
        .map(&extend)
        .collect::<Result<Vec<_>, _>>()?;
    let target_rows = base_s
        .target
        .basis()
        .iter()
        .map(&extend)
        .collect::<Result<Vec<_>, _>>()?;
    let n = s + lambdas.rows();
    let target = MatrixSpace::span(base_s.target.field(), n, m, &target_rows)?;
    Ok(BaseCandidate::new(members, target))
}

/// `C = Γ(⟨(1, α, …, α^{n−1})⟩)^⊥` together with an `(nm − m + 1)`-base of
/// `⟨Y_n, Y_nM, …, Y_nM^{m−2}⟩^⊥ ⊇ C`, where `M` is the companion matrix of
/// the generator of `gamma`. Needs `q ≥ m` and `2 ≤ n ≤ m`.
pub fn dual_gabidulin_mtr_base(
    gamma: &GammaBasis,
    n: usize,
) -> Result<(RankCode, ConstructionResult), RmError> {
    let alpha = generator_of(gamma)?;
    let (ext, base) = (gamma.ext(), gamma.base());
    let m = gamma.m();
    if (base.order() as usize) < m {
        return Err(RmError::FieldTooSmall {
            needed: m as u64,
            order: base.order(),
        });
    }
    if !(2..=m).contains(&n) {
        return Err(RmError::BadParameter(format!(
            "need 2 <= n <= {m}, got {n}"
        )));
    }
    let spec = gamma
        .companion()
        .ok_or_else(|| RmError::BadParameter("extension degree must be at least 2".into()))?;
    let powers = (0..n).map(|i| ext.pow(alpha, i as u64)).collect();
    let code = dual_code(&gamma_expand_code(
        &VectorCode::new(ext, n, vec![powers])?,
        gamma,
    )?);
    let gammas = GammaSet::smallest(base, m - 1)?;
    let res = base_dual_powers_rect(&spec, n, m - 1, &gammas)?;
    if !code.space().is_subspace_of(res.target()) {
        return Err(RmError::InvalidWitness(
            "dual code is not inside the base target".into(),
        ));
    }
    Ok((code, res))
}

/// Tensor-rank bounds for the row space of a `2 × m` generator matrix.
#[derive(Clone, Debug)]
pub struct TwoDimBound {
    pub lower: usize,
    pub upper: usize,
    pub code: RankCode,
    pub witness: BaseCandidate,
}

/// Bounds `3m − 2 ≤ trk ≤ 4m − 4` for `Γ(⟨G⟩)`, where `G` reduces to
/// `(I_2 | *)` and each reduced row has entries spanning a hyperplane.
/// The upper witness is the union of the 1-dimensional bases of the two
/// reduced rows. A rank-one `G` falls back to [`one_dim_witness`].
pub fn two_dim_bound(gamma: &GammaBasis, g: &[Vec<Elem>]) -> Result<TwoDimBound, RmError> {
    let (ext, base) = (gamma.ext(), gamma.base());
    let m = gamma.m();
    if g.len() != 2 || g.iter().any(|r| r.len() != m) {
        return Err(RmError::BadParameter(format!("generator must be 2 x {m}")));
    }
    let q = base.order() as usize;
    if q + 3 < 2 * m {
        return Err(RmError::FieldTooSmall {
            needed: (2 * m - 3) as u64,
            order: base.order(),
        });
    }
    let red = FqMatrix::from_rows(ext, g)?.rref();
    let row = |i: usize| red.matrix.row(i).to_vec();
    match red.rank {
        0 => Err(RmError::BadParameter("generator is zero".into())),
        1 => {
            let v = row(0);
            let (code, witness) = one_dim_witness(gamma, &v)?;
            let digits: Vec<Vec<Elem>> = v.iter().map(|&x| ext.digits(x)).collect();
            let t = FqMatrix::from_rows(base, &digits)?.rank();
            Ok(TwoDimBound {
                lower: kruskal_bound(code.k(), t),
                upper: witness.len(),
                code,
                witness,
            })
        }
        _ => {
            if red.pivots != [0, 1] {
                return Err(RmError::BadParameter(
                    "generator does not reduce to (I_2 | *)".into(),
                ));
            }
            let mut members = Vec::new();
            let mut span = Echelon::new(base, m * m);
            let mut target = MatrixSpace::zero(base, m, m);
            for i in 0..2 {
                let v = row(i);
                let digits: Vec<Vec<Elem>> = v.iter().map(|&x| ext.digits(x)).collect();
                if FqMatrix::from_rows(base, &digits)?.rank() != m - 1 {
                    return Err(RmError::BadParameter(format!(
                        "reduced row {i} does not span a hyperplane"
                    )));
                }
                let (code, witness) = one_dim_witness(gamma, &v)?;
                target = target.sum(code.space());
                for a in witness.members {
                    if span.insert(a.data()) {
                        members.push(a);
                    }
                }
            }
            let code = RankCode::new(target);
            let witness = checked(members, &code)?;
            Ok(TwoDimBound {
                lower: kruskal_bound(2 * m, m - 1),
                upper: witness.len(),
                code,
                witness,
            })
        }
    }
}

/// Result of [`shorten_mtr`].
#[derive(Clone, Debug, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum Shortened {
    /// `C ∩ ⟨A_s : s ∈ S⟩ = {0}`.
    Trivial,
    /// The MTR subcode `C ∩ ⟨A_s : s ∈ S⟩` with witness `{A_s : s ∈ S}`.
    Code {
        code: RankCode,
        witness: BaseCandidate,
    },
}

/// Restricts an `[n×m, k, n]` code with an MTR witness `A` of size
/// `k + n − 1` to the members indexed by `subset`. The result is trivial
/// for `|S| < n` and an `[n×m, |S|−n+1, n]` MTR code otherwise.
pub fn shorten_mtr(
    code: &RankCode,
    witness: &[FqMatrix],
    subset: &[usize],
) -> Result<Shortened, RmError> {
    let n = code.n();
    let r = witness.len();
    for (i, &s) in subset.iter().enumerate() {
        if s >= r {
            return Err(RmError::BadSubset(format!("index {s} out of range 0..{r}")));
        }
        if subset[..i].contains(&s) {
            return Err(RmError::BadSubset(format!("index {s} repeated")));
        }
    }
    if code.k() == 0 || r != code.k() + n - 1 {
        return Err(RmError::InvalidWitness(format!(
            "witness has {r} members, expected k + n - 1 = {}",
            code.k() + n - 1
        )));
    }
    checked(witness.to_vec(), code)?;

    let chosen: Vec<FqMatrix> = subset.iter().map(|&s| witness[s].clone()).collect();
    let (rows, cols) = code.space().shape();
    let sub = MatrixSpace::span(code.field(), rows, cols, &chosen)?;
    let meet = code.space().intersection(&sub);
    if subset.len() < n {
        return if meet.dim() == 0 {
            Ok(Shortened::Trivial)
        } else {
            Err(RmError::InvalidWitness("code has distance below n".into()))
        };
    }
    if meet.dim() != subset.len() + 1 - n {
        return Err(RmError::InvalidWitness(format!(
            "shortened code has dimension {}, expected {}",
            meet.dim(),
            subset.len() + 1 - n
        )));
    }
    let short = RankCode::new(meet);
    let witness = checked(chosen, &short)?;
    Ok(Shortened::Code {
        code: short,
        witness,
    })
}

/// An `F_q`-`[n×m, k, d]` code with an MTR witness of size `k + d − 1`.
///
/// For `d ≥ 2` the code is the `d`-row power code `Γ(⟨(1, …, α^{d−1})⟩)`
/// shortened to dimension `k` and padded with zero rows. Needs
/// `1 ≤ k ≤ m`, `1 ≤ d ≤ min(n, m)` and `q ≥ m + d − 2`.
pub fn build_mtr(
    q: u32,
    n: usize,
    m: usize,
    k: usize,
    d: usize,
) -> Result<(RankCode, BaseCandidate), RmError> {
    let out_of_range = |why: &str| {
        Err(RmError::ParametersOutOfRange(format!(
            "{why} (q={q}, n={n}, m={m}, k={k}, d={d})"
        )))
    };
    if k == 0 || k > m {
        return out_of_range("need 1 <= k <= m");
    }
    if d == 0 || d > n || d > m {
        return out_of_range("need 1 <= d <= min(n, m)");
    }
    if (q as usize) + 2 < m + d {
        return out_of_range("need q >= m + d - 2");
    }
    let base = field_of_order(q)?;

    if d == 1 {
        let members: Vec<FqMatrix> = (0..k).map(|j| FqMatrix::unit(&base, n, m, 0, j)).collect();
        let code = RankCode::new(MatrixSpace::span(&base, n, m, &members)?);
        let witness = checked(members, &code)?;
        return Ok((code, witness));
    }

    let gamma = GammaBasis::over(&base, m)?;
    let (power_code, full) = power_code_witness(&gamma, d)?;
    let subset: Vec<usize> = (0..k + d - 1).collect();
    let Shortened::Code { witness, .. } = shorten_mtr(&power_code, &full.members, &subset)? else {
        unreachable!("|S| = k + d - 1 >= d");
    };
    let padding = FqMatrix::zeros(&base, n - d, d);
    let extended = extend_base_lindep(&witness, &padding)?;
    let code = RankCode::new(extended.target.clone());
    Ok((code, extended))
}
