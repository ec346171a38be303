use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use clap::Parser;
use cone_hull::cli::{run, CliError, ExperimentConfig};
use cone_hull::rational::parse_rational;
use cone_hull::RationalPolytope;
use serde_json::Value;

fn demo(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("demos").join(name)
}

fn bin(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cone-hull"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .env_remove("CONE_HULL_BUDGET")
        .spawn()
        .unwrap();
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn run_args(args: &[&str]) -> Result<String, CliError> {
    let mut full = vec!["cone-hull"];
    full.extend_from_slice(args);
    run(&ExperimentConfig::try_parse_from(full).unwrap())
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("cone-hull-{}-{name}", std::process::id()))
}

#[test]
fn exit_codes() {
    let torus = demo("torus_simplex.json");
    let torus = torus.to_str().unwrap();
    assert_eq!(bin(&["polytope", "support", "--input", torus], None).status.code(), Some(0));
    // schema violation
    let out = bin(&["polytope", "support", "--input", "-"], Some(r#"{"bogus": 1}"#));
    assert_eq!(out.status.code(), Some(2));
    // missing file
    assert_eq!(bin(&["polytope", "support", "--input", "/nonexistent/doc.json"], None).status.code(), Some(2));
    // mathematical precondition: a segment has no interior
    let seg = r#"{"polytope": {"dim": 2, "vertices": [[0, 0], [1, 1]]}}"#;
    assert_eq!(bin(&["lattice", "independent", "--input", "-"], Some(seg)).status.code(), Some(2));
    // enumeration budget
    let out = Command::new(env!("CARGO_BIN_EXE_cone-hull"))
        .args(["polytope", "exponents", "--input", torus, "--m", "50"])
        .env("CONE_HULL_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    // unwritable output
    let out = bin(&["polytope", "support", "--input", torus, "--out", "/nonexistent/dir/out.json"], None);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn malformed_document_names_the_field() {
    let doc = r#"{"polytope": {"dim": 2, "vertices": [[0, 0], [1, "x/y"]]}}"#;
    let out = bin(&["polytope", "support", "--input", "-"], Some(doc));
    assert_eq!(out.status.code(), Some(2));
    let doc = r#"{"body": {"dim": 2, "pieces": [{"J": [1, 2], "B": []}]}}"#;
    let out = bin(&["vsk", "eval", "--input", "-"], Some(doc));
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("body.pieces[0]"), "{err}");
    let doc = r#"{"m": -3}"#;
    let out = bin(&["polytope", "refine", "--input", "-"], Some(doc));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("`m`"), "{err}");
}

#[test]
fn grid_values_are_support_on_torus() {
    let text = run_args(&[
        "vsk", "grid", "--input", demo("torus_simplex.json").to_str().unwrap(),
        "--grid", "-2:2:9", "--csv",
    ])
    .unwrap();
    let s = RationalPolytope::standard_simplex(2);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x_1,x_2,value,maximizer"));
    let mut rows = 0;
    for line in lines {
        let cols: Vec<&str> = line.split(',').collect();
        let x: Vec<f64> = cols[..2].iter().map(|c| c.parse().unwrap()).collect();
        let value: f64 = cols[2].parse().unwrap();
        assert!((value - s.support_f64(&x)).abs() < 1e-12, "{line}");
        rows += 1;
    }
    assert_eq!(rows, 81);
}

#[test]
fn refine_output_reparses() {
    let first = run_args(&[
        "polytope", "refine", "--input", demo("triangle.json").to_str().unwrap(), "--m", "3",
    ])
    .unwrap();
    let path = temp_path("refined.json");
    std::fs::write(&path, &first).unwrap();
    // the output is itself a problem document
    let again = run_args(&["polytope", "refine", "--input", path.to_str().unwrap()]).unwrap();
    assert_eq!(first, again);
    let doc: Value = serde_json::from_str(&first).unwrap();
    for v in doc["polytope"]["vertices"].as_array().unwrap() {
        for c in v.as_array().unwrap() {
            let r = parse_rational(c.as_str().unwrap()).unwrap();
            assert!((r * num::BigRational::from_integer(3.into())).is_integer());
        }
    }
    std::fs::remove_file(path).ok();
}

#[test]
fn truncation_error_stays_under_tail_bound() {
    let text = run_args(&["approx", "run", "--input", demo("geometric.json").to_str().unwrap()]).unwrap();
    let doc: Value = serde_json::from_str(&text).unwrap();
    let report = &doc["report"];
    assert_eq!(report["norms_agree"], Value::Bool(true));
    let tail = report["tail_bound"].as_f64().unwrap();
    assert!(report["sup_err_hull"].as_f64().unwrap() <= tail * (1.0 + 1e-12));
    for row in doc["curve"].as_array().unwrap() {
        let t = row["tail_bound"].as_f64().unwrap();
        assert!(row["sup_err_k"].as_f64().unwrap() <= t * (1.0 + 1e-12));
        assert!(row["sup_err_hull"].as_f64().unwrap() <= t * (1.0 + 1e-12));
    }
}

#[test]
fn seed_changes_samples_but_not_structure() {
    let input = demo("kinked_body.json");
    let a = run_args(&["vsk", "sample", "--input", input.to_str().unwrap(), "--seed", "1"]).unwrap();
    let b = run_args(&["vsk", "sample", "--input", input.to_str().unwrap(), "--seed", "1"]).unwrap();
    let c = run_args(&["vsk", "sample", "--input", input.to_str().unwrap(), "--seed", "2"]).unwrap();
    assert_eq!(a, b);
    assert_ne!(a, c);
}

#[test]
fn csv_and_json_flags() {
    let input = demo("torus_simplex.json");
    let input = input.to_str().unwrap();
    let json = run_args(&["polytope", "support", "--input", input, "--json"]).unwrap();
    assert!(serde_json::from_str::<Value>(&json).is_ok());
    let csv = run_args(&["polytope", "support", "--input", input, "--format", "csv"]).unwrap();
    assert!(csv.lines().next().unwrap().contains(','));
    assert!(ExperimentConfig::try_parse_from(["cone-hull", "polytope", "support", "--json", "--csv"]).is_err());
}

#[test]
fn every_subcommand_runs_on_its_demo() {
    let cases: &[(&[&str], &str)] = &[
        (&["polytope", "support"], "torus_simplex.json"),
        (&["polytope", "contains"], "torus_simplex.json"),
        (&["polytope", "exponents", "--m", "2"], "triangle.json"),
        (&["polytope", "distance"], "half_triangle_growth.json"),
        (&["polytope", "dual"], "triangle.json"),
        (&["polytope", "section"], "triangle.json"),
        (&["lattice", "independent"], "triangle.json"),
        (&["lattice", "separate"], "separate.json"),
        (&["lattice", "fibers"], "diagonal_fibers.json"),
        (&["lattice", "pullback"], "pullback.json"),
        (&["vsk", "eval"], "torus_simplex.json"),
        (&["vsk", "hull"], "kinked_body.json"),
        (&["vsk", "siciak"], "kinked_body.json"),
        (&["vsk", "axes"], "triangle.json"),
        (&["approx", "escape"], "escape.json"),
        (&["approx", "domain"], "escape.json"),
    ];
    for (args, file) in cases {
        let path = demo(file);
        let mut full: Vec<&str> = args.to_vec();
        full.extend(["--input", path.to_str().unwrap()]);
        let out = run_args(&full);
        assert!(out.is_ok(), "{args:?} on {file}: {:?}", out.err());
        assert!(serde_json::from_str::<Value>(&out.unwrap()).is_ok());
    }
}
