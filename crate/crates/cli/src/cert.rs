//! Certificate schema and independent re-verification.

use std::collections::BTreeMap;

use perfbase_exactla::{FqMatrix, MatrixSpace};
use perfbase_gf::{Elem, Field};
use perfbase_tensor3::{min_rank, verify_base, BaseCandidate, VerificationReport};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::CliError;

/// Current certificate schema version.
pub const SCHEMA: &str = "1";

/// Row-major matrix of canonical element encodings.
pub type Matrix = Vec<Vec<Elem>>;

/// `F_{p^degree}` with its modulus over `F_p` (low to high, monic; empty for
/// a prime field).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub degree: u32,
    #[serde(default)]
    pub modulus: Vec<Elem>,
}

impl FieldSpec {
    pub fn of(field: &Field) -> FieldSpec {
        FieldSpec {
            p: field.characteristic(),
            degree: field.degree(),
            modulus: field.modulus().to_vec(),
        }
    }

    /// Rebuilds the field. Only extensions of a prime field are encodable.
    pub fn build(&self) -> Result<Field, CliError> {
        let modulus = (self.degree > 1).then_some(&self.modulus[..]);
        Field::new(self.p, self.degree, modulus).map_err(|e| CliError::invalid(e.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Construction {
    pub name: String,
    #[serde(default)]
    pub params: BTreeMap<String, Value>,
}

/// The three verdicts of a base check plus its counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub rank_one: bool,
    pub independent: bool,
    pub contains_target: bool,
    pub members: usize,
    pub target_dim: usize,
}

impl ReportRecord {
    pub fn passed(&self) -> bool {
        self.rank_one && self.independent && self.contains_target
    }
}

impl From<&VerificationReport> for ReportRecord {
    fn from(r: &VerificationReport) -> ReportRecord {
        ReportRecord {
            rank_one: r.rank_one,
            independent: r.independent,
            contains_target: r.contains_target,
            members: r.members,
            target_dim: r.target_dim,
        }
    }
}

/// Rank-metric claims about the target space viewed as a code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeRecord {
    pub k: usize,
    pub d: usize,
    pub mtr: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: String,
    pub field: FieldSpec,
    pub construction: Construction,
    /// `[n, m]`.
    pub shape: [usize; 2],
    /// Basis of the target space.
    pub target: Vec<Matrix>,
    pub base: Vec<Matrix>,
    #[serde(default)]
    pub auxiliary: BTreeMap<String, Matrix>,
    pub report: ReportRecord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub code: Option<CodeRecord>,
}

impl Certificate {
    /// Certificate for `base`; the report is computed here.
    pub fn new(
        name: &str,
        params: BTreeMap<String, Value>,
        base: &BaseCandidate,
        aux: &[(String, FqMatrix)],
    ) -> Result<Certificate, CliError> {
        let report = verify_base(base)?;
        let field = base.target.field();
        let (n, m) = base.target.shape();
        Ok(Certificate {
            schema: SCHEMA.into(),
            field: FieldSpec::of(field),
            construction: Construction {
                name: name.into(),
                params,
            },
            shape: [n, m],
            target: base.target.basis().iter().map(FqMatrix::to_rows).collect(),
            base: base.members.iter().map(FqMatrix::to_rows).collect(),
            auxiliary: aux.iter().map(|(k, v)| (k.clone(), v.to_rows())).collect(),
            report: ReportRecord::from(&report),
            code: None,
        })
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Certificate, CliError> {
        serde_json::from_str(text)
            .map_err(|e| CliError::invalid(format!("malformed certificate: {e}")))
    }

    /// Rebuilds the field, target space and base from the stored integers.
    pub fn decode(&self) -> Result<(Field, BaseCandidate), CliError> {
        if self.schema != SCHEMA {
            return Err(CliError::invalid(format!(
                "unsupported schema {:?}, expected {SCHEMA:?}",
                self.schema
            )));
        }
        let field = self.field.build()?;
        let [n, m] = self.shape;
        let target = self
            .target
            .iter()
            .enumerate()
            .map(|(i, a)| matrix(&field, n, m, a, &format!("target[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        let members = self
            .base
            .iter()
            .enumerate()
            .map(|(i, a)| matrix(&field, n, m, a, &format!("base[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        for (name, a) in &self.auxiliary {
            let rows = a.len();
            let cols = a.first().map_or(0, Vec::len);
            matrix(&field, rows, cols, a, &format!("auxiliary {name}"))?;
        }
        let space = MatrixSpace::span(&field, n, m, &target)?;
        if space.dim() != target.len() {
            return Err(CliError::invalid("target matrices are linearly dependent"));
        }
        Ok((field, BaseCandidate::new(members, space)))
    }
}

fn matrix(
    field: &Field,
    n: usize,
    m: usize,
    rows: &Matrix,
    what: &str,
) -> Result<FqMatrix, CliError> {
    if rows.len() != n || rows.iter().any(|r| r.len() != m) {
        return Err(CliError::invalid(format!("{what} is not {n}x{m}")));
    }
    if let Some(&bad) = rows.iter().flatten().find(|&&x| !field.contains(x as u64)) {
        return Err(CliError::invalid(format!(
            "{what} has entry {bad} outside {}",
            field.name()
        )));
    }
    Ok(FqMatrix::from_rows(field, rows)?)
}

/// Result of re-checking a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyOutcome {
    pub passed: bool,
    pub report: ReportRecord,
    /// One line per failed check, naming the offending matrix.
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub code: Option<CodeRecord>,
}

/// Re-checks every claim in `cert` from scratch. `guard` bounds the
/// minimum-rank scan used for code claims.
pub fn verify_certificate(cert: &Certificate, guard: u64) -> Result<VerifyOutcome, CliError> {
    let (_, base) = cert.decode()?;
    let report = verify_base(&base)?;
    let mut failures = Vec::new();
    for &i in &report.not_rank_one {
        let rank = base.members[i].rank();
        failures.push(format!("base[{i}] has rank {rank}, not 1"));
    }
    if let Some(i) = report.first_dependent {
        failures.push(format!("base[{i}] lies in the span of base[0..{i}]"));
    }
    if let Some(i) = report.missing_target {
        failures.push(format!(
            "canonical target basis matrix {i} is outside the span of the base"
        ));
    }
    let record = ReportRecord::from(&report);
    if record != cert.report {
        failures.push(format!(
            "stored report {:?} differs from recomputed {:?}",
            cert.report, record
        ));
    }

    let mut code = None;
    if let Some(claim) = cert.code {
        let k = base.target.dim();
        let d = if k == 0 {
            0
        } else {
            min_rank(&base.target, guard)?
        };
        let mtr = report.passed() && k > 0 && report.members == k + d - 1;
        let actual = CodeRecord { k, d, mtr };
        if claim.k != k {
            failures.push(format!(
                "code dimension is {k}, certificate claims {}",
                claim.k
            ));
        }
        if claim.d != d {
            failures.push(format!(
                "minimum rank distance is {d}, certificate claims {}",
                claim.d
            ));
        }
        if claim.mtr != mtr {
            failures.push(format!(
                "MTR claim {} does not hold (recomputed {mtr})",
                claim.mtr
            ));
        }
        code = Some(actual);
    }
    Ok(VerifyOutcome {
        passed: failures.is_empty(),
        report: record,
        failures,
        code,
    })
}
