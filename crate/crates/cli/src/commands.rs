//! Command implementations shared by the binary and the tests.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use perfbase_construct::{
    atkinson_base, base_dual_powers, base_dual_powers_rect, base_inverse_family, base_left_factor,
    base_rect_small_n, base_singular, CompanionSpec, ConstructionResult, GammaSet,
};
use perfbase_exactla::{FqMatrix, MatrixSpace};
use perfbase_gf::{Elem, Field};
use perfbase_rmcode::{build_mtr, dual_gabidulin_mtr_base, is_mtr, GammaBasis, DISTANCE_GUARD};
use perfbase_tensor3::{
    exhaustive_trk, guard_from_env, kruskal_bound, min_rank, BaseCandidate, DEFAULT_GUARD,
};
use serde_json::{json, Value};

use crate::args::{Cli, Command, ConstructArgs, FieldArgs, OracleArgs, Variant};
use crate::cert::{verify_certificate, Certificate, CodeRecord};
use crate::CliError;

/// What a successful command produced.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub exit_code: i32,
    /// Human-readable lines printed before the summary.
    pub lines: Vec<String>,
    /// Printed as the final stdout line in compact form.
    pub summary: Value,
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Construct(args) => construct_cmd(args),
        Command::Verify { file } => verify_cmd(file),
        Command::Oracle(args) => oracle_cmd(args),
    }
}

fn construct_cmd(args: &ConstructArgs) -> Result<Outcome, CliError> {
    let cert = construct(&args.variant)?;
    let mut lines = vec![format!(
        "{}: {} members for a target of dimension {} in {}^{}x{}",
        cert.construction.name,
        cert.report.members,
        cert.report.target_dim,
        cert.field.build()?.name(),
        cert.shape[0],
        cert.shape[1]
    )];
    if let Some(code) = cert.code {
        lines.push(format!(
            "code: k = {}, d = {}, MTR = {}",
            code.k, code.d, code.mtr
        ));
    }
    let summary = match &args.out {
        Some(path) => {
            write_file(path, &cert.to_json())?;
            lines.push(format!("wrote {}", path.display()));
            json!({
                "status": "ok",
                "construction": cert.construction.name,
                "members": cert.report.members,
                "target_dim": cert.report.target_dim,
                "out": path.display().to_string(),
            })
        }
        None => serde_json::to_value(&cert).expect("certificate serializes"),
    };
    Ok(Outcome {
        exit_code: 0,
        lines,
        summary,
    })
}

fn verify_cmd(path: &Path) -> Result<Outcome, CliError> {
    let cert = read_certificate(path)?;
    let outcome = verify_certificate(&cert, guard_from_env(DEFAULT_GUARD))?;
    let mut lines: Vec<String> = outcome
        .failures
        .iter()
        .map(|f| format!("FAIL {f}"))
        .collect();
    if outcome.passed {
        lines.push(format!(
            "PASS {} members, target dimension {}",
            outcome.report.members, outcome.report.target_dim
        ));
    }
    let mut summary = serde_json::to_value(&outcome).expect("outcome serializes");
    summary["status"] = json!(if outcome.passed { "pass" } else { "fail" });
    Ok(Outcome {
        exit_code: if outcome.passed { 0 } else { 1 },
        lines,
        summary,
    })
}

fn oracle_cmd(args: &OracleArgs) -> Result<Outcome, CliError> {
    let target = match &args.cert {
        Some(path) => read_certificate(path)?.decode()?.1.target,
        None => {
            let field = field_of(FieldArgs {
                p: args.p.expect("required by clap"),
                degree: args.degree,
            })?;
            let bottom = args.bottom.as_deref().expect("required by clap");
            let spec = companion_spec(&field, None, bottom)?;
            let n = args.rows.unwrap_or(spec.m());
            if n == 0 || n > spec.m() {
                return Err(CliError::invalid(format!(
                    "--rows must be in 1..={}",
                    spec.m()
                )));
            }
            let slices = parse_ints(&args.powers, "powers")?
                .into_iter()
                .map(|e| Ok(spec.power(e)?.top_rows(n)))
                .collect::<Result<Vec<_>, CliError>>()?;
            MatrixSpace::span(&field, n, spec.m(), &slices)?
        }
    };
    let target = if args.dual { target.dual() } else { target };
    let guard = guard_from_env(DEFAULT_GUARD);
    let trk = exhaustive_trk(&target, guard)?;
    let d = if target.dim() == 0 {
        0
    } else {
        min_rank(&target, guard)?
    };
    let lower = if d == 0 {
        0
    } else {
        kruskal_bound(target.dim(), d)
    };
    let mut lines = vec![format!(
        "tensor rank {} (dimension {}, minimum rank {d}, lower bound {lower}) after {} steps",
        trk.rank,
        target.dim(),
        trk.steps
    )];
    let mut summary = json!({
        "status": "ok",
        "trk": trk.rank,
        "dim": target.dim(),
        "min_rank": d,
        "kruskal": lower,
        "steps": trk.steps,
        "base": trk.base.members.iter().map(FqMatrix::to_rows).collect::<Vec<_>>(),
    });
    if let Some(path) = &args.out {
        let params = BTreeMap::from([
            ("dual".to_string(), json!(args.dual)),
            ("powers".to_string(), json!(args.powers)),
        ]);
        let cert = Certificate::new("oracle", params, &trk.base, &[])?;
        write_file(path, &cert.to_json())?;
        lines.push(format!("wrote {}", path.display()));
        summary["out"] = json!(path.display().to_string());
    }
    Ok(Outcome {
        exit_code: 0,
        lines,
        summary,
    })
}

/// Builds the certificate for one `construct` variant.
pub fn construct(variant: &Variant) -> Result<Certificate, CliError> {
    let mut params = BTreeMap::new();
    let mut put = |k: &str, v: Value| {
        params.insert(k.to_string(), v);
    };
    match variant {
        Variant::DualPowers {
            field,
            m,
            s,
            bottom,
            gammas,
            left,
        } => {
            let f = field_of(*field)?;
            let spec = companion_spec(&f, Some(*m), bottom)?;
            let gs = gamma_set(&f, *s, gammas.as_deref())?;
            put("m", json!(m));
            put("s", json!(s));
            put("bottom", json!(spec.bottom()));
            put("gammas", json!(gs.elements()));
            let res = match left {
                Some(text) => {
                    let b = parse_matrix(&f, text, *m, *m, "left")?;
                    put("left", json!(b.to_rows()));
                    base_left_factor(&spec, *s, &gs, &b)?
                }
                None => base_dual_powers(&spec, *s, &gs)?,
            };
            from_result(res, params)
        }
        Variant::DualPowersRect {
            field,
            m,
            n,
            s,
            bottom,
            gammas,
        } => {
            let f = field_of(*field)?;
            let spec = companion_spec(&f, Some(*m), bottom)?;
            let gs = gamma_set(&f, *s, gammas.as_deref())?;
            put("m", json!(m));
            put("n", json!(n));
            put("s", json!(s));
            put("bottom", json!(spec.bottom()));
            put("gammas", json!(gs.elements()));
            from_result(base_dual_powers_rect(&spec, *n, *s, &gs)?, params)
        }
        Variant::InverseFamily {
            field,
            m,
            bottom,
            extra,
        } => {
            let f = field_of(*field)?;
            let spec = companion_spec(&f, Some(*m), bottom)?;
            let extra = match extra {
                Some(text) => parse_ints(text, "extra")?,
                None => Vec::new(),
            };
            put("m", json!(m));
            put("bottom", json!(spec.bottom()));
            put("extra", json!(extra));
            from_result(base_inverse_family(&spec, &extra)?, params)
        }
        Variant::RectSmallN {
            field,
            m,
            n,
            bottom,
            left,
            right,
        } => {
            let f = field_of(*field)?;
            let spec = companion_spec(&f, Some(*m), bottom)?;
            let l = match left {
                Some(t) => parse_matrix(&f, t, *n, *n, "left")?,
                None => FqMatrix::identity(&f, *n),
            };
            let r = match right {
                Some(t) => parse_matrix(&f, t, *m, *m, "right")?,
                None => FqMatrix::identity(&f, *m),
            };
            put("m", json!(m));
            put("n", json!(n));
            put("bottom", json!(spec.bottom()));
            put("left", json!(l.to_rows()));
            put("right", json!(r.to_rows()));
            from_result(base_rect_small_n(&spec, *n, &l, &r)?, params)
        }
        Variant::Singular {
            field,
            m,
            s,
            bottom,
        } => {
            let f = field_of(*field)?;
            let spec = companion_spec(&f, Some(*m), bottom)?;
            put("m", json!(m));
            put("s", json!(s));
            put("bottom", json!(spec.bottom()));
            from_result(base_singular(&spec, *s)?, params)
        }
        Variant::Atkinson { field, n } => {
            let f = field_of(*field)?;
            put("n", json!(n));
            from_result(atkinson_base(&f, *n)?, params)
        }
        Variant::GabidulinDualMtr { field, m, n } => {
            let f = field_of(*field)?;
            if *m < 2 {
                return Err(CliError::invalid("--m must be at least 2"));
            }
            let gamma = GammaBasis::over(&f, *m)?;
            let (code, res) = dual_gabidulin_mtr_base(&gamma, *n)?;
            put("m", json!(m));
            put("n", json!(n));
            put("extension_modulus", json!(gamma.ext().modulus()));
            put("alpha", json!(gamma.generator()));
            let guard = guard_from_env(DISTANCE_GUARD);
            let d = code.distance(guard)?;
            let mtr = is_mtr(&code, res.members(), guard)?;
            let base = BaseCandidate::new(res.members().to_vec(), code.space().clone());
            let mut cert = Certificate::new("gabidulin-dual-mtr", params, &base, &res.aux)?;
            cert.code = Some(CodeRecord {
                k: code.k(),
                d,
                mtr,
            });
            Ok(cert)
        }
        Variant::BuildMtr { field, n, m, k, d } => {
            let f = field_of(*field)?;
            put("n", json!(n));
            put("m", json!(m));
            put("k", json!(k));
            put("d", json!(d));
            let (code, witness) = build_mtr(f.order(), *n, *m, *k, *d)?;
            let guard = guard_from_env(DISTANCE_GUARD);
            let dist = code.distance(guard)?;
            let mtr = is_mtr(&code, &witness.members, guard)?;
            let mut cert = Certificate::new("build-mtr", params, &witness, &[])?;
            cert.code = Some(CodeRecord {
                k: code.k(),
                d: dist,
                mtr,
            });
            Ok(cert)
        }
    }
}

fn from_result(
    res: ConstructionResult,
    params: BTreeMap<String, Value>,
) -> Result<Certificate, CliError> {
    Certificate::new(res.name, params, &res.base, &res.aux)
}

fn field_of(args: FieldArgs) -> Result<Field, CliError> {
    Ok(Field::new(args.p, args.degree, None)?)
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::invalid(format!("{}: {e}", path.display())))
}

pub fn read_certificate(path: &Path) -> Result<Certificate, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::invalid(format!("{}: {e}", path.display())))?;
    Certificate::from_json(&text)
}

/// Comma-separated signed integers.
pub fn parse_ints(text: &str, what: &str) -> Result<Vec<i64>, CliError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| CliError::invalid(format!("--{what}: {t:?} is not an integer")))
        })
        .collect()
}

/// Field elements from integers: reduced mod `p` in a prime field,
/// canonical encodings otherwise.
fn to_elems(field: &Field, values: &[i64], what: &str) -> Result<Vec<Elem>, CliError> {
    values
        .iter()
        .map(|&v| {
            if field.is_prime_field() {
                Ok(field.from_int(v))
            } else if (0..field.order() as i64).contains(&v) {
                Ok(v as Elem)
            } else {
                Err(CliError::invalid(format!(
                    "--{what}: {v} is not an element of {}",
                    field.name()
                )))
            }
        })
        .collect()
}

fn companion_spec(
    field: &Field,
    m: Option<usize>,
    bottom: &str,
) -> Result<CompanionSpec, CliError> {
    let row = to_elems(field, &parse_ints(bottom, "bottom")?, "bottom")?;
    if let Some(m) = m {
        if row.len() != m {
            return Err(CliError::invalid(format!(
                "--bottom has {} entries, expected m = {m}",
                row.len()
            )));
        }
    }
    Ok(CompanionSpec::new(field, row)?)
}

fn gamma_set(field: &Field, s: usize, text: Option<&str>) -> Result<GammaSet, CliError> {
    match text {
        None => Ok(GammaSet::smallest(field, s)?),
        Some(t) => {
            let elems = to_elems(field, &parse_ints(t, "gammas")?, "gammas")?;
            if elems.len() != s {
                return Err(CliError::invalid(format!(
                    "--gammas has {} entries, expected s = {s}",
                    elems.len()
                )));
            }
            Ok(GammaSet::new(field, elems)?)
        }
    }
}

/// Matrix from `"r0c0,r0c1;r1c0,r1c1"`.
fn parse_matrix(
    field: &Field,
    text: &str,
    rows: usize,
    cols: usize,
    what: &str,
) -> Result<FqMatrix, CliError> {
    let parsed = text
        .split(';')
        .map(|r| to_elems(field, &parse_ints(r, what)?, what))
        .collect::<Result<Vec<_>, _>>()?;
    if parsed.len() != rows || parsed.iter().any(|r| r.len() != cols) {
        return Err(CliError::invalid(format!("--{what} must be {rows}x{cols}")));
    }
    Ok(FqMatrix::from_rows(field, &parsed)?)
}
