//! Reference certificates stored under `fixtures/`.

use std::collections::BTreeMap;

use perfbase_exactla::FqMatrix;
use perfbase_gf::{Elem, Field};
use perfbase_rmcode::{gamma_expand_code, GammaBasis, VectorCode};
use perfbase_tensor3::BaseCandidate;
use serde_json::json;

use crate::args::{FieldArgs, Variant};
use crate::cert::Certificate;
use crate::commands::construct;
use crate::CliError;

fn fa(p: u32) -> FieldArgs {
    FieldArgs { p, degree: 1 }
}

/// The `construct` invocations behind the CLI-built fixtures.
pub fn variants() -> Vec<(&'static str, Variant)> {
    vec![
        (
            "f5_m4_s3_dual_powers.json",
            Variant::DualPowers {
                field: fa(5),
                m: 4,
                s: 3,
                bottom: "1,0,0,0".into(),
                gammas: None,
                left: None,
            },
        ),
        (
            "f7_m5_n3_rect_small_n.json",
            Variant::RectSmallN {
                field: fa(7),
                m: 5,
                n: 3,
                bottom: "6,5,5,2,4".into(),
                left: None,
                right: None,
            },
        ),
        (
            "f7_m5_rootless_quintic_inverse_family.json",
            Variant::InverseFamily {
                field: fa(7),
                m: 5,
                bottom: "3,6,0,0,0".into(),
                extra: None,
            },
        ),
        (
            "gabidulin_dual_mtr_q3_n3_m3.json",
            Variant::GabidulinDualMtr {
                field: fa(3),
                m: 3,
                n: 3,
            },
        ),
        (
            "gabidulin_dual_mtr_q5_n3_m4.json",
            Variant::GabidulinDualMtr {
                field: fa(5),
                m: 4,
                n: 3,
            },
        ),
        (
            "gabidulin_dual_mtr_q3_n2_m3.json",
            Variant::GabidulinDualMtr {
                field: fa(3),
                m: 3,
                n: 2,
            },
        ),
        (
            "build_mtr_q7_n3_m3_k2_d3.json",
            Variant::BuildMtr {
                field: fa(7),
                n: 3,
                m: 3,
                k: 2,
                d: 3,
            },
        ),
    ]
}

/// Top three rows of the six members of the `F_5`, `m = 4` extension
/// example, as displayed.
pub const EXTENSION_TOP_ROWS: [[[Elem; 4]; 3]; 6] = [
    [[4, 2, 0, 1], [3, 4, 0, 2], [1, 3, 0, 4]],
    [[1, 1, 0, 1], [3, 3, 0, 3], [4, 4, 0, 4]],
    [[3, 0, 2, 4], [2, 0, 3, 1], [3, 0, 2, 4]],
    [[2, 3, 3, 4], [2, 3, 3, 4], [2, 3, 3, 4]],
    [[3, 3, 4, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
    [[0, 0, 0, 0], [0, 0, 0, 0], [0, 2, 1, 1]],
];

/// Appended fourth rows, as displayed.
pub const EXTENSION_LAST_ROWS: [[Elem; 4]; 6] = [
    [2, 1, 0, 3],
    [1, 1, 0, 1],
    [4, 0, 1, 2],
    [3, 2, 2, 1],
    [2, 1, 1, 0],
    [0, 4, 2, 2],
];

/// First row of the fifth member that makes the example consistent.
pub const EXTENSION_FIFTH_FIXED: [Elem; 4] = [3, 4, 4, 0];

/// Certificate for the six displayed 4×4 members of the `F_5` extension
/// example against `Γ(⟨(1, α, α², 4+3α+2α²)⟩)`, with `α` a root of
/// `x⁴+4x²+4x+2`. With `corrected` the fifth member's first row is
/// replaced by [`EXTENSION_FIFTH_FIXED`].
pub fn worked_extension(corrected: bool) -> Result<Certificate, CliError> {
    let f5 = Field::prime(5)?;
    let ext = Field::extension(&f5, 4, Some(&[2, 4, 4, 0, 1]))?;
    let alpha = 5;
    let gamma = GammaBasis::power_basis(&ext, alpha)?;
    let tail = ext.from_digits(&[4, 3, 2, 0]);
    let v = vec![1, alpha, ext.mul(alpha, alpha), tail];
    let code = gamma_expand_code(&VectorCode::new(&ext, 4, vec![v])?, &gamma)?;

    let mut members = Vec::with_capacity(6);
    for (i, (top, last)) in EXTENSION_TOP_ROWS
        .iter()
        .zip(&EXTENSION_LAST_ROWS)
        .enumerate()
    {
        let mut rows: Vec<Vec<Elem>> = top.iter().map(|r| r.to_vec()).collect();
        if corrected && i == 4 {
            rows[0] = EXTENSION_FIFTH_FIXED.to_vec();
        }
        rows.push(last.to_vec());
        members.push(FqMatrix::from_rows(&f5, &rows)?);
    }
    let params = BTreeMap::from([
        ("extension_modulus".to_string(), json!([2, 4, 4, 0, 1])),
        ("lambda".to_string(), json!([4, 3, 2])),
        ("corrected".to_string(), json!(corrected)),
    ]);
    let aux = vec![("M".to_string(), gamma.mult_matrix(alpha))];
    Certificate::new(
        "lindep-extension",
        params,
        &BaseCandidate::new(members, code.space().clone()),
        &aux,
    )
}

/// Every shipped fixture, keyed by file name.
pub fn all() -> Result<Vec<(String, Certificate)>, CliError> {
    let mut out = Vec::new();
    for (name, variant) in variants() {
        out.push((name.to_string(), construct(&variant)?));
    }
    out.push(("f5_m4_extension_fixed.json".into(), worked_extension(true)?));
    out.push((
        "f5_m4_extension_listed.json".into(),
        worked_extension(false)?,
    ));
    Ok(out)
}
