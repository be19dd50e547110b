//! The shipped `fixtures/` certificates match the constructors and verify.
//!
//! Set `PERFBASE_REGEN_FIXTURES=1` to rewrite them.

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;

use perfbase_cli::cert::{verify_certificate, Certificate};
use perfbase_cli::fixtures;
use perfbase_tensor3::DEFAULT_GUARD;

fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

#[test]
fn fixtures_are_current_and_verify() {
    let dir = fixture_dir();
    let regen = std::env::var_os("PERFBASE_REGEN_FIXTURES").is_some();
    let all = fixtures::all().unwrap();
    for (name, cert) in &all {
        let path = dir.join(name);
        let text = cert.to_json();
        if regen {
            fs::write(&path, &text).unwrap();
        }
        let stored = fs::read_to_string(&path).unwrap_or_else(|e| {
            panic!(
                "{}: {e}; regenerate with PERFBASE_REGEN_FIXTURES=1",
                path.display()
            )
        });
        assert_eq!(
            stored, text,
            "{name} is stale; regenerate with PERFBASE_REGEN_FIXTURES=1"
        );

        let loaded = Certificate::from_json(&stored).unwrap();
        assert_eq!(
            loaded.to_json(),
            stored,
            "{name} does not round-trip byte for byte"
        );
        let outcome = verify_certificate(&loaded, DEFAULT_GUARD).unwrap();
        assert_eq!(outcome.report, loaded.report, "{name}");
        let expect_pass = name != "f5_m4_extension_listed.json";
        assert_eq!(
            outcome.passed, expect_pass,
            "{name}: {:?}",
            outcome.failures
        );
    }

    let expected: BTreeSet<String> = all.iter().map(|(n, _)| n.clone()).collect();
    let present: BTreeSet<String> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|n| n.ends_with(".json"))
        .collect();
    assert_eq!(present, expected, "unexpected files in fixtures/");
}

#[test]
fn listed_extension_has_a_rank_two_member() {
    let cert = fixtures::worked_extension(false).unwrap();
    let r = cert.report;
    assert!(!r.rank_one);
    assert_eq!((r.members, r.target_dim), (6, 4));
    let outcome = verify_certificate(&cert, DEFAULT_GUARD).unwrap();
    assert_eq!(outcome.failures[0], "base[4] has rank 2, not 1");
    assert!(fixtures::worked_extension(true).unwrap().report.passed());
}
