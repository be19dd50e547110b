use perfbase_exactla::{Echelon, FqMatrix, MatrixSpace};

use crate::TensorError;

/// Claimed perfect base for a target space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseCandidate {
    pub members: Vec<FqMatrix>,
    pub target: MatrixSpace,
}

impl BaseCandidate {
    pub fn new(members: Vec<FqMatrix>, target: MatrixSpace) -> BaseCandidate {
        BaseCandidate { members, target }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Span of the members.
    pub fn span(&self) -> MatrixSpace {
        let (n, m) = self.target.shape();
        MatrixSpace::span(self.target.field(), n, m, &self.members)
            .expect("members checked by caller")
    }
}

/// Outcome of [`verify_base`], with witnesses for each failed check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub rank_one: bool,
    pub independent: bool,
    pub contains_target: bool,
    pub members: usize,
    pub target_dim: usize,
    /// Indices of members whose rank is not exactly 1.
    pub not_rank_one: Vec<usize>,
    /// First member lying in the span of the earlier ones.
    pub first_dependent: Option<usize>,
    /// First canonical target basis matrix outside the span of the members.
    pub missing_target: Option<usize>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.rank_one && self.independent && self.contains_target
    }

    /// One-line description of the first failure, if any.
    pub fn failure(&self) -> Option<String> {
        if let Some(&i) = self.not_rank_one.first() {
            return Some(format!("member {i} does not have rank 1"));
        }
        if let Some(i) = self.first_dependent {
            return Some(format!("member {i} depends on earlier members"));
        }
        self.missing_target
            .map(|i| format!("target basis matrix {i} is not in the span"))
    }
}

/// Checks that every member has rank 1, the members are independent, and
/// their span contains the target.
pub fn verify_base(cand: &BaseCandidate) -> Result<VerificationReport, TensorError> {
    let shape = cand.target.shape();
    let field = cand.target.field();
    for a in &cand.members {
        if a.shape() != shape {
            return Err(TensorError::ShapeMismatch {
                left: shape,
                right: a.shape(),
            });
        }
        if a.field() != field {
            return Err(perfbase_exactla::LinAlgError::FieldMismatch.into());
        }
    }
    let not_rank_one: Vec<usize> = cand
        .members
        .iter()
        .enumerate()
        .filter(|(_, a)| a.rank() != 1)
        .map(|(i, _)| i)
        .collect();

    let mut span = Echelon::new(field, shape.0 * shape.1);
    let mut first_dependent = None;
    for (i, a) in cand.members.iter().enumerate() {
        if !span.insert(a.data()) && first_dependent.is_none() {
            first_dependent = Some(i);
        }
    }
    let target = cand.target.basis_matrix();
    let missing_target = (0..target.rows()).find(|&i| !span.contains(target.row(i)));

    Ok(VerificationReport {
        rank_one: not_rank_one.is_empty(),
        independent: first_dependent.is_none(),
        contains_target: missing_target.is_none(),
        members: cand.members.len(),
        target_dim: cand.target.dim(),
        not_rank_one,
        first_dependent,
        missing_target,
    })
}
