//! Explicit perfect bases for tensors built from a companion matrix `M`.
//!
//! Two families are covered. The first spans slice spaces of the form
//! `(I | M | M⁻¹ | M^{s_1} | …)` and their row truncations `Y_n·M^j`
//! ([`base_inverse_family`], [`base_rect_small_n`]). The second spans trace
//! duals `⟨I, M, …, M^{s−1}⟩^⊥` and their rectangular and singular variants
//! ([`base_dual_powers`], [`base_dual_powers_rect`], [`base_left_factor`],
//! [`base_singular`], [`atkinson_base`]).
//!
//! Every constructor runs [`verify_base`](perfbase_tensor3::verify_base) on
//! its output before returning; a failed self-check surfaces as
//! [`ConstructError::VerificationFailed`].

mod companion;
mod dual;
mod inverse;

pub use companion::{companion, epsilon, poly_at_matrix, shift_j, y_n, CompanionSpec, GammaSet};
pub use dual::{
    atkinson_base, base_dual_powers, base_dual_powers_rect, base_left_factor, base_singular,
    dual_powers_members,
};
pub use inverse::{base_inverse_family, base_rect_small_n};

use perfbase_exactla::{FqMatrix, LinAlgError, MatrixSpace};
use perfbase_tensor3::{verify_base, BaseCandidate, TensorError, VerificationReport};

/// Errors raised by the constructors.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructError {
    #[error("companion matrix needs m >= 2, got {0}")]
    BadDimension(usize),
    #[error("M is singular (a_1 = 0)")]
    SingularM,
    #[error("field of order {order} is too small: need at least {needed}")]
    FieldTooSmall { needed: u64, order: u32 },
    #[error("invalid gamma set: {0}")]
    BadGammaSet(String),
    #[error("gamma must be nonzero")]
    ZeroGamma,
    #[error("rootless cofactor of degree {0} does not support extra powers")]
    UnsupportedCofactorDegree(usize),
    #[error("characteristic polynomial has a repeated linear root")]
    RepeatedRoot,
    #[error("unsupported row count n = {0}")]
    BadN(usize),
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("parameters not covered: {0}")]
    CaseNotCovered(String),
    #[error("construction requires characteristic other than 2")]
    CharTwo,
    #[error("matrix is singular")]
    Singular,
    #[error("self-check failed: {0}")]
    VerificationFailed(String),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
}

/// Verified base together with the matrices used to build it.
#[derive(Clone, Debug)]
pub struct ConstructionResult {
    /// Short name of the construction route.
    pub name: &'static str,
    pub base: BaseCandidate,
    pub report: VerificationReport,
    /// Named auxiliary matrices (`P`, `Q`, `M_h`, `D1`, …).
    pub aux: Vec<(String, FqMatrix)>,
}

impl ConstructionResult {
    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    pub fn members(&self) -> &[FqMatrix] {
        &self.base.members
    }

    pub fn target(&self) -> &MatrixSpace {
        &self.base.target
    }

    pub fn aux(&self, key: &str) -> Option<&FqMatrix> {
        self.aux.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }
}

/// Verifies `members` against `target` and packages the result.
pub(crate) fn finish(
    name: &'static str,
    members: Vec<FqMatrix>,
    target: MatrixSpace,
    aux: Vec<(String, FqMatrix)>,
) -> Result<ConstructionResult, ConstructError> {
    let base = BaseCandidate::new(members, target);
    let report = verify_base(&base)?;
    if let Some(why) = report.failure() {
        return Err(ConstructError::VerificationFailed(format!("{name}: {why}")));
    }
    Ok(ConstructionResult {
        name,
        base,
        report,
        aux,
    })
}

/// Drops zero members and members dependent on earlier ones.
pub(crate) fn prune(members: Vec<FqMatrix>) -> Vec<FqMatrix> {
    let Some(first) = members.first() else {
        return members;
    };
    let (n, m) = first.shape();
    let mut span = perfbase_exactla::Echelon::new(first.field(), n * m);
    members
        .into_iter()
        .filter(|a| span.insert(a.data()))
        .collect()
}
