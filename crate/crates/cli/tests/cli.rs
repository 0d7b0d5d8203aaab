//! End-to-end tests of the binary: schema shape, catalog round-trips,
//! file inputs, backend agreement and exit codes.

use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_skewprol"))
}

fn run_ok(args: &[&str]) -> Value {
    let out = bin().args(args).output().expect("binary runs");
    assert!(
        out.status.success(),
        "args {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON output")
}

fn run_raw(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

#[test]
fn prolong_adjoint_su3_reports_the_invariant_line() {
    let v = run_ok(&["prolong", "--rep", "catalog:adjoint-su3", "--p", "3", "--json"]);
    assert_eq!(v["schema"], "1");
    assert_eq!(v["dim"], 1);
    assert_eq!(v["classification"], "adjoint_cartan_line");
}

#[test]
fn prolong_with_backend_both_confirms_exactly() {
    let v = run_ok(&[
        "prolong",
        "--rep",
        "catalog:adjoint-su3",
        "--p",
        "3",
        "--backend",
        "both",
        "--json",
    ]);
    assert_eq!(v["exact_confirmed"], true);
}

#[test]
fn pluecker_cayley_from_file() {
    // dump the catalog entry, extract the model form, write it to a file
    let dump = run_ok(&["catalog", "dump", "spin7"]);
    let cayley = &dump["model_forms"]["cayley"];
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cayley8.json");
    let mut f = std::fs::File::create(&path).unwrap();
    write!(f, "{}", serde_json::to_string(cayley).unwrap()).unwrap();
    let spec = format!("file:{}", path.display());
    let v = run_ok(&["pluecker", "--form", &spec, "--json"]);
    assert_eq!(v["plc"], false);
    assert_eq!(v["classical"], false);
    assert_eq!(v["jacobi"], false);
}

#[test]
fn dump_then_load_reproduces_analyses() {
    let dump = run_ok(&["catalog", "dump", "u3"]);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("u3.json");
    std::fs::write(&path, serde_json::to_string(&dump).unwrap()).unwrap();
    let spec = format!("file:{}", path.display());
    let from_file = run_ok(&["epsperp", "--rep", &spec, "--json"]);
    let from_catalog = run_ok(&["epsperp", "--rep", "catalog:u3", "--json"]);
    for key in ["kernel_dim", "coker_dim", "dim_gperp", "is_isomorphism"] {
        assert_eq!(from_file[key], from_catalog[key], "mismatch on {key}");
    }
    let prolong_file = run_ok(&["prolong", "--rep", &spec, "--p", "3", "--json"]);
    assert_eq!(prolong_file["dim"], 0);
}

#[test]
fn holonomy_of_catalog_cartan_form() {
    let v = run_ok(&["holonomy", "--form", "catalog:adjoint-su3:cartan", "--json"]);
    assert_eq!(v["gstar_dim"], 8);
    assert_eq!(v["factors"][0]["label"], "adjoint_cartan");
}

#[test]
fn casimir_of_spin7_is_scalar() {
    let v = run_ok(&["casimir", "--rep", "catalog:spin7", "--k", "1", "--json"]);
    assert_eq!(v["is_scalar"], true);
    let mu = v["mean_eigenvalue"].as_f64().unwrap();
    assert!((mu - 2.0 * 21.0 / 8.0).abs() < 1e-9);
}

#[test]
fn classify_u3_single_vanishing_factor() {
    let v = run_ok(&["classify", "--rep", "catalog:u3", "--json"]);
    assert_eq!(v["trivial_dim"], 0);
    assert_eq!(v["factors"].as_array().unwrap().len(), 1);
    assert_eq!(v["factors"][0]["labels"][0], "vanishing_prolongation");
    assert_eq!(v["global_prolongation_dim"], 0);
}

#[test]
fn exit_codes() {
    // unknown catalog entry: input error -> 2
    let out = run_raw(&["prolong", "--rep", "catalog:nonsense", "--p", "3"]);
    assert_eq!(out.status.code(), Some(2));
    // malformed file: input error -> 2, message points at the file
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\"n\": 4, \"p\": 2, \"terms\": [{\"indices\": [2,2], \"coeff\": 1.0}]}")
        .unwrap();
    let spec = format!("file:{}", path.display());
    let out = run_raw(&["pluecker", "--form", &spec]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("term 0"), "diagnostic should name the offending term: {err}");
    // exact backend demanded for a float-only file input -> 2
    let dump = run_ok(&["catalog", "dump", "so4"]);
    let rep_path = dir.path().join("so4.json");
    std::fs::write(&rep_path, serde_json::to_string(&dump).unwrap()).unwrap();
    let spec = format!("file:{}", rep_path.display());
    let out = run_raw(&["prolong", "--rep", &spec, "--backend", "exact"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn catalog_list_is_versioned_json() {
    let v = run_ok(&["catalog", "list", "--json"]);
    assert_eq!(v["schema"], "1");
    let entries = v["entries"].as_array().unwrap();
    assert!(entries.iter().any(|e| e["name"] == "spin7" && e["dim"] == 21));
}

#[test]
fn verify_passes_and_orders_items() {
    let out = run_raw(&["verify", "--backend", "both", "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    let items = v["items"].as_array().unwrap();
    assert_eq!(items.len(), 10);
    let ids: Vec<u32> = items
        .iter()
        .map(|i| i["id"].as_str().unwrap().split('-').next().unwrap().parse().unwrap())
        .collect();
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    assert_eq!(ids, sorted, "items must be in canonical order");
}
