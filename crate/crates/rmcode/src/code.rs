use std::sync::OnceLock;

use perfbase_exactla::{FqMatrix, MatrixSpace};
use perfbase_gf::{Elem, Field};
use perfbase_tensor3::{min_rank, verify_base, BaseCandidate};

use crate::{solve_left, RmError};

/// `F_{q^m}`-linear code `C ≤ F_{q^m}^n` given by independent generator rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorCode {
    field: Field,
    n: usize,
    generators: Vec<Vec<Elem>>,
}

impl VectorCode {
    pub fn new(field: &Field, n: usize, generators: Vec<Vec<Elem>>) -> Result<VectorCode, RmError> {
        if !generators.is_empty() {
            let mat = FqMatrix::from_rows(field, &generators)?;
            if mat.cols() != n {
                return Err(RmError::BadParameter(format!(
                    "generators have length {}, expected {n}",
                    mat.cols()
                )));
            }
            if mat.rank() != generators.len() {
                return Err(RmError::DependentGenerators);
            }
        }
        Ok(VectorCode {
            field: field.clone(),
            n,
            generators,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Length `n`.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Dimension over `F_{q^m}`.
    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Vec<Elem>] {
        &self.generators
    }
}

/// `F_q`-linear rank-metric code in `F_q^{n×m}` with a lazily computed
/// minimum distance.
#[derive(Clone, Debug)]
pub struct RankCode {
    space: MatrixSpace,
    distance: OnceLock<usize>,
}

impl PartialEq for RankCode {
    fn eq(&self, other: &RankCode) -> bool {
        self.space == other.space
    }
}

impl Eq for RankCode {}

impl RankCode {
    pub fn new(space: MatrixSpace) -> RankCode {
        RankCode {
            space,
            distance: OnceLock::new(),
        }
    }

    pub fn space(&self) -> &MatrixSpace {
        &self.space
    }

    pub fn field(&self) -> &Field {
        self.space.field()
    }

    pub fn n(&self) -> usize {
        self.space.shape().0
    }

    pub fn m(&self) -> usize {
        self.space.shape().1
    }

    /// Dimension `k` over `F_q`.
    pub fn k(&self) -> usize {
        self.space.dim()
    }

    /// Minimum rank of a nonzero codeword, `n + 1` for the zero code.
    /// Scans one codeword per projective point; cached after the first call.
    pub fn distance(&self, guard: u64) -> Result<usize, RmError> {
        if let Some(&d) = self.distance.get() {
            return Ok(d);
        }
        let d = min_rank(&self.space, guard)?;
        Ok(*self.distance.get_or_init(|| d))
    }

    /// Distance if already computed.
    pub fn cached_distance(&self) -> Option<usize> {
        self.distance.get().copied()
    }
}

/// Exact minimum rank distance of `code`.
pub fn min_rank_distance(code: &RankCode, guard: u64) -> Result<usize, RmError> {
    code.distance(guard)
}

/// Rank-metric Singleton bound met with equality:
/// `k = max(n,m)·(min(n,m) − d + 1)`.
pub fn is_mrd(code: &RankCode, guard: u64) -> Result<bool, RmError> {
    let d = code.distance(guard)? as i64;
    let (n, m) = (code.n() as i64, code.m() as i64);
    Ok(code.k() as i64 == n.max(m) * (n.min(m) - d + 1))
}

/// True when `witness` is a perfect base of `code` of size `k + d − 1`.
pub fn is_mtr(code: &RankCode, witness: &[FqMatrix], guard: u64) -> Result<bool, RmError> {
    if let Some(bad) = witness
        .iter()
        .find(|a| a.shape() != code.space.shape() || a.field() != code.field())
    {
        return Err(RmError::InvalidWitness(format!(
            "member of shape {:?} for a code of shape {:?}",
            bad.shape(),
            code.space.shape()
        )));
    }
    let cand = BaseCandidate::new(witness.to_vec(), code.space.clone());
    if !verify_base(&cand)?.passed() {
        return Ok(false);
    }
    let d = code.distance(guard)?;
    Ok(code.k() > 0 && witness.len() == code.k() + d - 1)
}

/// Trace dual of `code`.
pub fn dual_code(code: &RankCode) -> RankCode {
    RankCode::new(code.space.dual())
}

/// Linear block code in `F_q^R` with Hamming metric.
#[derive(Clone, Debug)]
pub struct BlockCode {
    generator: FqMatrix,
    distance: OnceLock<usize>,
}

impl BlockCode {
    /// Code spanned by the rows of `generator`, which must be independent.
    pub fn new(generator: FqMatrix) -> Result<BlockCode, RmError> {
        if generator.rank() != generator.rows() {
            return Err(RmError::DependentGenerators);
        }
        Ok(BlockCode {
            generator,
            distance: OnceLock::new(),
        })
    }

    pub fn generator(&self) -> &FqMatrix {
        &self.generator
    }

    /// Length `R`.
    pub fn len(&self) -> usize {
        self.generator.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    /// Minimum Hamming weight of a nonzero codeword, `R + 1` for the zero code.
    pub fn distance(&self, guard: u64) -> Result<usize, RmError> {
        if let Some(&d) = self.distance.get() {
            return Ok(d);
        }
        let d = scan_min_weight(&self.generator, guard)?;
        Ok(*self.distance.get_or_init(|| d))
    }

    /// True when `d = R − k + 1`.
    pub fn is_mds(&self, guard: u64) -> Result<bool, RmError> {
        Ok(self.k() > 0 && self.distance(guard)? + self.k() == self.len() + 1)
    }
}

fn scan_min_weight(gen: &FqMatrix, guard: u64) -> Result<usize, RmError> {
    let field = gen.field();
    let (k, len) = gen.shape();
    if k == 0 {
        return Ok(len + 1);
    }
    let q = field.order() as u64;
    let count = q
        .checked_pow(k as u32)
        .filter(|&c| c <= guard)
        .ok_or(RmError::GuardExceeded { guard })?;
    let mut best = len;
    let mut coeffs = vec![0 as Elem; k];
    // Odometer over all coefficient vectors; only those with leading
    // nonzero entry 1 are evaluated.
    for _ in 1..count {
        for c in coeffs.iter_mut().rev() {
            *c += 1;
            if (*c as u64) < q {
                break;
            }
            *c = 0;
        }
        if coeffs.iter().find(|&&c| c != 0) != Some(&1) {
            continue;
        }
        let word = gen.vec_mul(&coeffs);
        best = best.min(word.iter().filter(|&&x| x != 0).count());
    }
    Ok(best)
}

/// Exact minimum Hamming distance of `code`.
pub fn min_hamming_distance(code: &BlockCode, guard: u64) -> Result<usize, RmError> {
    code.distance(guard)
}

/// `C_A = ψ_A(C)`: coordinates of the codewords of `code` with respect to
/// the perfect base `base`.
pub fn psi_block(code: &RankCode, base: &[FqMatrix]) -> Result<BlockCode, RmError> {
    let cand = BaseCandidate::new(base.to_vec(), code.space().clone());
    let report = verify_base(&cand)?;
    if let Some(why) = report.failure() {
        return Err(RmError::NotABase(why));
    }
    let field = code.field();
    let stacked: Vec<Vec<Elem>> = base.iter().map(|a| a.vectorize()).collect();
    let rows = if stacked.is_empty() {
        FqMatrix::zeros(field, 0, code.n() * code.m())
    } else {
        FqMatrix::from_rows(field, &stacked)?
    };
    let basis = code.space().basis_matrix();
    let coords: Vec<Vec<Elem>> = (0..basis.rows())
        .map(|i| solve_left(&rows, basis.row(i)).expect("span checked by verify_base"))
        .collect();
    let generator = if coords.is_empty() {
        FqMatrix::zeros(field, 0, base.len())
    } else {
        FqMatrix::from_rows(field, &coords)?
    };
    BlockCode::new(generator)
}
