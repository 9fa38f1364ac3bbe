use std::path::PathBuf;
use std::process::{Command, Output};

use linkform_cli::report::*;
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn linkform(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linkform")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn schema() -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("docs/report-schema.json");
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Top-level keys must be declared by the schema definition, and every
/// required key must be present.
fn conforms(v: &Value, def: &str) {
    let schema = schema();
    let d = &schema["$defs"][def];
    let props = d["properties"].as_object().unwrap_or_else(|| panic!("no schema for {def}"));
    let obj = v.as_object().unwrap();
    for k in obj.keys() {
        assert!(props.contains_key(k), "{def}: undeclared key {k}");
    }
    for k in d["required"].as_array().unwrap() {
        assert!(obj.contains_key(k.as_str().unwrap()), "{def}: missing {k}");
    }
}

/// Parses a report as its typed struct and checks that re-emitting it gives the same bytes.
fn round_trip<T: Serialize + DeserializeOwned>(text: &str, def: &str) -> T {
    let v: Value = serde_json::from_str(text).unwrap();
    conforms(&v, def);
    let typed: T = serde_json::from_str(text).unwrap();
    let mut again = Vec::new();
    linkform_cli::emit(&mut again, &typed).unwrap();
    assert_eq!(String::from_utf8(again).unwrap(), text);
    typed
}

#[test]
fn analyze_lens_space() {
    let o = linkform(&["analyze", "--gram", &data("a8neg.json")]);
    assert_eq!(o.status.code(), Some(0));
    let r: TheoremJson = round_trip(&stdout(&o), "analyze");
    assert_eq!(r.signature, -8);
    assert_eq!(r.det, "9");
    assert!(r.theorem_applies && r.conclusion_holds);
    assert_eq!(r.metabolizer, Some(vec![vec![3]]));
}

#[test]
fn knot_9_1() {
    let o = linkform(&["knot", "--seifert", &data("k9_1.json")]);
    assert_eq!(o.status.code(), Some(0));
    let r: KnotJson = round_trip(&stdout(&o), "knot");
    assert!(r.boundary_zero);
    assert_eq!(r.signature, -8);
    assert_eq!(r.signature_mod_8, Some(0));

    let o = linkform(&["knot", "--seifert", &data("trefoil.csv")]);
    let r: KnotJson = round_trip(&stdout(&o), "knot");
    assert_eq!((r.signature, r.determinant.as_str(), r.boundary_zero), (-2, "3", false));

    let o = linkform(&["knot", "--seifert", &data("k6_3_sum_8_1.json")]);
    let r: KnotJson = round_trip(&stdout(&o), "knot");
    assert!(r.boundary_zero);
    assert_eq!(r.signature, 0);
}

#[test]
fn dioph_verify() {
    let o = linkform(&["dioph", "--sign", "-1", "--pq", "99", "--r", "100", "--m", "99", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("restriction holds"), "{}", stdout(&o));
    let o = linkform(&["dioph", "--sign", "1", "--pq", "11", "--r", "12", "--m", "11", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("both residues occur"));
}

#[test]
fn dioph_csv_is_parallel_invariant() {
    let base = ["dioph", "--sign", "1", "--pq", "21", "--r", "22", "--m", "41"];
    let serial = linkform(&base);
    let parallel = linkform(&[&base[..], &["--jobs", "4"]].concat());
    assert_eq!(serial.status.code(), Some(0));
    assert_eq!(serial.stdout, parallel.stdout);

    let mut reader = csv::Reader::from_reader(serial.stdout.as_slice());
    assert_eq!(reader.headers().unwrap(), vec!["p", "q", "r", "m", "sign", "p_plus_q_mod_8"]);
    let rows: Vec<Vec<i64>> = reader
        .records()
        .map(|r| r.unwrap().iter().map(|x| x.parse().unwrap()).collect())
        .collect();
    assert!(rows.iter().any(|r| r == &[3, 7, 6, 9, 1, 2]));
    for r in &rows {
        assert_eq!(r[0] * r[1] + r[0] * r[2] + r[1] * r[2], r[4] * r[3] * r[3]);
    }

    let dedup = linkform(&[&base[..], &["--dedup"]].concat());
    let n = csv::Reader::from_reader(dedup.stdout.as_slice()).records().count();
    assert!(n < rows.len());
}

#[test]
fn gauss_reports() {
    let o = linkform(&["gauss", "--gram", &data("e8.json")]);
    let r: GaussJson = round_trip(&stdout(&o), "gauss");
    assert_eq!((r.method.as_str(), r.passed, r.cosets), ("exact", true, 1));
    assert_eq!(r.numeric_error, None);

    let serial = linkform(&["gauss", "--gram", &data("a8neg.json"), "--approx"]);
    let parallel = linkform(&["gauss", "--gram", &data("a8neg.json"), "--approx", "--jobs", "3"]);
    assert_eq!(serial.stdout, parallel.stdout);
    let r: GaussJson = round_trip(&stdout(&serial), "gauss");
    assert!(r.passed && r.method == "exact");
    assert!(r.numeric_error.unwrap() < 1e-9);

    let o = linkform(&["gauss", "--gram", &data("a2.csv"), "--bound-det", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let e: ErrorReport = round_trip(&stdout(&o), "error");
    assert_eq!(e.error.kind, "discriminant");
}

#[test]
fn other_reports_round_trip() {
    let o = linkform(&["diag", "--gram", &data("a2.csv"), "--pivot", "last"]);
    let r: DiagJson = round_trip(&stdout(&o), "diag");
    assert_eq!(r.signature, 2);
    assert_eq!(r.pivot, "last");

    let o = linkform(&["boundary", "--gram", &data("a2.csv")]);
    let r: BoundaryJson = round_trip(&stdout(&o), "boundary");
    assert!(!r.boundary_zero);
    assert_eq!(r.boundary.iter().map(|b| b.prime).collect::<Vec<_>>(), vec![2, 3]);

    let o = linkform(&["disc", "--gram", &data("a8neg.json")]);
    let r: DiscJson = round_trip(&stdout(&o), "disc");
    assert_eq!(r.orders, vec!["9"]);
    assert_eq!(r.linking, vec![vec!["1/9"]]);
    assert_eq!(r.metabolizer.unwrap().order, 3);

    let o = linkform(&["disc", "--gram", &data("a8neg.json"), "--bound-group", "4"]);
    let r: DiscJson = round_trip(&stdout(&o), "disc");
    assert!(!r.metabolizer_searched && r.metabolizer.is_none());

    let o = linkform(&["pretzel", "3", "5", "-2"]);
    let r: PretzelJson = round_trip(&stdout(&o), "pretzel");
    assert_eq!((r.signature, r.boundary_zero), (Some(-8), Some(true)));
    let o = linkform(&["pretzel", "3", "-3", "0"]);
    let r: PretzelJson = round_trip(&stdout(&o), "pretzel");
    assert_eq!((r.signature, r.witt_class), (None, None));
}

#[test]
fn deterministic_output() {
    for args in [
        vec!["analyze", "--gram", "A"],
        vec!["diag", "--gram", "A", "--approx"],
        vec!["boundary", "--gram", "A"],
        vec!["disc", "--gram", "A"],
    ] {
        let args: Vec<String> = args.iter().map(|a| if *a == "A" { data("a8neg.json") } else { a.to_string() }).collect();
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(linkform(&args).stdout, linkform(&args).stdout);
    }
}

#[test]
fn exit_codes() {
    let o = linkform(&["analyze", "--gram", "/nonexistent/form.json"]);
    assert_eq!(o.status.code(), Some(1));
    let e: ErrorReport = round_trip(&stdout(&o), "error");
    assert_eq!(e.error.kind, "input");

    let o = linkform(&["knot", "--seifert", &data("a2.csv")]);
    assert_eq!(o.status.code(), Some(1));
    let e: ErrorReport = round_trip(&stdout(&o), "error");
    assert_eq!(e.error.kind, "knot");

    let o = linkform(&["pretzel", "2", "3", "4"]);
    assert_eq!(o.status.code(), Some(1));

    assert_eq!(linkform(&["analyze"]).status.code(), Some(2));
    assert_eq!(linkform(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(linkform(&["dioph", "--sign", "0", "--pq", "1", "--r", "1", "--m", "1"]).status.code(), Some(2));
    assert_eq!(linkform(&["--help"]).status.code(), Some(0));
}

#[test]
fn in_process_run_matches_binary() {
    let mut buf = Vec::new();
    let code = linkform_cli::run(["linkform", "analyze", "--gram", &data("a8neg.json")], &mut buf);
    assert_eq!(code, 0);
    assert_eq!(buf, linkform(&["analyze", "--gram", &data("a8neg.json")]).stdout);
}
