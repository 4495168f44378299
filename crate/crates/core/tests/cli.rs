use std::collections::BTreeSet;

use nodal_core::cli::{exit_code, run, COMMANDS};
use nodal_core::Error;

const DATA: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/data/");
const GOLDEN: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden/");

fn data(name: &str) -> String {
    format!("{DATA}{name}")
}

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("nodal").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

/// Compares with tests/golden/<name>; set UPDATE_GOLDEN=1 to rewrite.
fn golden(name: &str, args: &[&str]) {
    let out = ok(args);
    let path = format!("{GOLDEN}{name}");
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    assert_eq!(out, want, "{name}");
}

fn invocations() -> Vec<Vec<String>> {
    let sextic = data("sextic25.json");
    let cubic = data("cubic_one_node.json");
    let ci = data("ci_1245.json");
    let tw = data("twisted_cubic.json");
    let rows: &[&[&str]] = &[
        &["expand", "7", "3"],
        &["grow", "7", "3"],
        &["shadow", "6", "6"],
        &["oseq", "1", "3", "6", "7"],
        &["profile", "7", "3", "2"],
        &["gotzmann", "7", "3"],
        &["graded-dim", "5", "3"],
        &["rank", "RANK"],
        &["span", "TW", "3"],
        &["euler", "x0^3 + x0*x1*x2"],
        &["hilbert", "CI", "9"],
        &["section", "TW", "x3", "--kmax", "5"],
        &["bsdim", "TW", "2"],
        &["dk", "CI", "8"],
        &["apolar", "FUN"],
        &["socle", "CI", "8"],
        &["symmetric", "1", "3", "1"],
        &["unimodal", "1", "3", "1"],
        &["stanley", "1", "3", "6", "6", "6", "6", "6", "3", "1"],
        &["ci-series", "1", "2", "4", "5"],
        &["ci-socle", "1", "2", "4", "5"],
        &["tate", "CI"],
        &["bounds", "7"],
        &["enumerate", "6"],
        &["facts", "6", "1", "3", "5", "7", "8", "7", "5", "3", "1"],
        &["degree-arg", "6", "1", "3", "5", "7", "8", "7", "5", "3", "1"],
        &["filter", "7", "--r2-steps", "1"],
        &["nodes", "1", "3", "6", "6", "6", "6", "6", "3", "1"],
        &["rule", "R4", "{\"n_vars\": 4, \"generators\": [\"x0 + x1\"]}", "2"],
        &["jacobian", "x0^3 + x1^3 + x2^3 + x3^3 + x4^3"],
        &["verify-node", "CUBIC", "--point", "0"],
        &["points-hilbert", "SEXTIC", "3"],
        &["defect", "CUBIC"],
        &["gsection", "SEXTIC"],
        &["report", "6"],
    ];
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|a| match *a {
                    "RANK" => data("rank_example.json"),
                    "TW" => tw.clone(),
                    "CI" => ci.clone(),
                    "FUN" => data("quartic_functional.json"),
                    "CUBIC" => cubic.clone(),
                    "SEXTIC" => sextic.clone(),
                    other => other.to_string(),
                })
                .collect()
        })
        .collect()
}

#[test]
fn every_command_runs_in_both_modes() {
    let mut seen = BTreeSet::new();
    for args in invocations() {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        seen.insert(args[0].to_string());
        assert!(!ok(&args).trim().is_empty(), "{args:?}");
        let mut json_args = vec!["--json"];
        json_args.extend(&args);
        let out = ok(&json_args);
        serde_json::from_str::<serde_json::Value>(&out).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    }
    let listed: BTreeSet<String> = COMMANDS.iter().map(|(c, _)| c.to_string()).collect();
    assert_eq!(seen, listed);
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["no-such-command"]).0, 1);
    assert_eq!(call(&["expand", "7"]).0, 1);
    assert_eq!(call(&["hilbert", "{\"n_vars\": 4}", "3"]).0, 1);
    assert_eq!(call(&["hilbert", "/nonexistent/ideal.json", "3"]).0, 1);
    assert_eq!(call(&["bounds", "5"]).0, 1);
    assert_eq!(call(&["rule", "R9", "{}", "2"]).0, 1);
    assert_eq!(call(&["--help"]).0, 0);
    assert_eq!(exit_code(&Error::Indeterminate("x".into())), 2);
    let (code, _, err) = call(&["ci-series", "0", "2"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error:"));
}

#[test]
fn seed_changes_only_general_choices() {
    let a = ok(&["--json", "--seed", "1", "gsection", &data("sextic25.json")]);
    let b = ok(&["--json", "--seed", "2", "gsection", &data("sextic25.json")]);
    let h = |s: &str| serde_json::from_str::<serde_json::Value>(s).unwrap()["h"].clone();
    assert_eq!(h(&a), h(&b));
}

#[test]
fn golden_outputs() {
    golden("expand.txt", &["expand", "7", "3"]);
    golden("ci_series.txt", &["ci-series", "1", "2", "4", "5"]);
    golden("filter6.txt", &["filter", "6"]);
    golden("filter6.json", &["--json", "filter", "6"]);
    golden("report6.txt", &["report", "6"]);
    golden("bounds7.txt", &["bounds", "7"]);
    golden("enumerate6.json", &["--json", "enumerate", "6"]);
    golden("defect_sextic.json", &["--json", "defect", &data("sextic25.json")]);
    golden("gsection_sextic.txt", &["gsection", &data("sextic25.json")]);
}
