//! End-to-end checks of the binary: exit codes, JSON round-trips, CSV shape.

use std::process::{Command, Output};

use rootbalance::balance::SubsetSelection;
use rootbalance::witnesses::{verify_certificate, verify_well_balanced, WellBalancedCertificate};
use rootbalance::{CoordVector, DynkinLabel, Family, RootSystem};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rootbalance"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn roots_prints_the_index_table() {
    let out = run(&["roots", "G", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("6 positive roots"));
    assert_eq!(text.lines().count(), 7); // header + six rows
}

#[test]
fn roots_json_is_the_canonical_document() {
    let out = run(&["roots", "E", "6", "--json"]);
    assert!(out.status.success());
    let rs = RootSystem::from_canonical_json(stdout(&out).trim()).unwrap();
    assert_eq!(rs.count(), 36);
    // Bit-exact round trip.
    assert_eq!(rs.to_canonical_json(), stdout(&out).trim());
}

#[test]
fn check_full_a3_reports_an_obstruction() {
    let out = run(&["check", "A", "3", "--subset", "full"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("balanced: false"));
    assert!(text.contains("obstruction"));
}

#[test]
fn check_json_witness_re_verifies() {
    let out = run(&["check", "B", "2", "--subset", "complement:1", "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(doc["balanced"], serde_json::Value::Bool(true));
    let rs = RootSystem::build(DynkinLabel::new(Family::B, 2).unwrap()).unwrap();
    let witness: rootbalance::balance::SignedCombination =
        serde_json::from_value(doc["witness"].clone()).unwrap();
    assert!(witness.is_zero_witness(&rs).unwrap());
}

#[test]
fn subset_spec_complement_of_long_root_on_c5() {
    let rs = RootSystem::build(DynkinLabel::new(Family::C, 5).unwrap()).unwrap();
    let two_e5 = rs
        .root_ref(&CoordVector::new(vec![0, 0, 0, 0, 4]))
        .unwrap()
        .unwrap()
        .index;
    let spec = format!("complement:{two_e5}");
    let sel = SubsetSelection::parse_spec(&rs, &spec).unwrap();
    assert_eq!(sel.len(), 24);
    let out = run(&["check", "C", "5", "--subset", &spec]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("balanced: true"));
}

#[test]
fn witness_json_round_trips_through_the_verifier() {
    for (which, family, rank) in [
        ("thm41", "D", "4"),
        ("thm32", "E", "7"),
        ("thm41", "F", "4"),
    ] {
        let out = run(&["witness", which, family, rank, "--json"]);
        assert!(out.status.success());
        let cert: WellBalancedCertificate = serde_json::from_str(stdout(&out).trim()).unwrap();
        let rs = RootSystem::build(cert.system).unwrap();
        verify_well_balanced(&rs, &cert).unwrap();
        // Identical re-serialization.
        assert_eq!(
            serde_json::to_string(&cert).unwrap(),
            stdout(&out).trim()
        );
    }
}

#[test]
fn d4_maximum_witness_complement_is_the_block() {
    let out = run(&["witness", "thm41", "D", "4", "--json"]);
    let cert: WellBalancedCertificate = serde_json::from_str(stdout(&out).trim()).unwrap();
    let rs = RootSystem::build(cert.system).unwrap();
    let mut vs: Vec<Vec<i64>> = cert
        .complement
        .iter()
        .map(|&i| rs.positive_roots()[i].coords().to_vec())
        .collect();
    vs.sort();
    assert_eq!(
        vs,
        vec![
            vec![0, 0, 2, -2],
            vec![0, 0, 2, 2],
            vec![2, -2, 0, 0],
            vec![2, 2, 0, 0],
        ]
    );
}

#[test]
fn extremal_json_certificates_re_verify() {
    let out = run(&["extremal", "min-balanced", "E", "7", "--json"]);
    assert!(out.status.success());
    let report: rootbalance::extremal::ExtremalReport =
        serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(report.value, 3);
    let rs = RootSystem::build(report.label).unwrap();
    let lower = verify_certificate(&rs, &report.lower_certificate).unwrap();
    let upper = verify_certificate(&rs, &report.upper_certificate).unwrap();
    assert!(lower.verified && upper.verified);
}

#[test]
fn verify_tables_emits_all_pass_csv() {
    let out = run(&["verify-tables", "--max-rank", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "label,quantity,table_value,computed_value,method,pass"
    );
    for line in lines {
        assert!(line.ends_with(",true"), "bad row: {line}");
    }
}

#[test]
fn verify_tables_json_embeds_certificates() {
    let out = run(&["verify-tables", "--max-rank", "2", "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert!(doc["rows"].as_array().unwrap().len() >= 14);
    assert!(!doc["reports"].as_array().unwrap().is_empty());
}

#[test]
fn remark_c5_passes() {
    let out = run(&["remark-c5"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("witness terms: 23"));
}

#[test]
fn usage_errors_exit_two() {
    // Unknown flag.
    assert_eq!(run(&["roots", "A", "2", "--bogus"]).status.code(), Some(2));
    // Inadmissible rank.
    assert_eq!(run(&["roots", "D", "3"]).status.code(), Some(2));
    // Bad subset index.
    assert_eq!(
        run(&["check", "A", "2", "--subset", "indices:0,1,99"]).status.code(),
        Some(2)
    );
    // Bad subset grammar.
    assert_eq!(
        run(&["check", "A", "2", "--subset", "everything"]).status.code(),
        Some(2)
    );
}

#[test]
fn budget_refusal_exits_three() {
    let out = run(&["check", "E", "7", "--subset", "full"]);
    assert_eq!(out.status.code(), Some(3));
    // A raised budget is also refused when the table cap is too small.
    let out = run(&[
        "check",
        "A",
        "4",
        "--subset",
        "full",
        "--budget-table",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(3));
}
