use std::process::{Command, Output};

use serde_json::Value;
use trigdunkl_core::coeff::RatFunc;
use trigdunkl_core::special::SchwarzRow;
use trigdunkl_core::LaurentElement;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trigdunkl"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn special_e8_prop32() {
    let out = run(&["special", "--type", "E8", "--verify", "prop32"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["a"], "30*k^2");
    assert_eq!(v["rank"], 8);
    assert_eq!(v["exponents"].as_array().unwrap().len(), 9);
    assert_eq!(v["exponents"][8], v["exponents"][3]);
    assert!(v["x"].is_null());
    let verdicts = &v["verdicts"];
    assert!(verdicts["quadratic"].as_array().unwrap().iter().all(|b| b == true));
    assert_eq!(verdicts["relations"], true);
    assert_eq!(verdicts["exactness"], true);
}

#[test]
fn special_with_rational_couplings() {
    let out = run(&["special", "--type", "E8", "--k", "1/6"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["a"], "5/6");
    assert_eq!(v["kplus"]["member"], true);
    let m = &v["monodromy"][0]["eigenvalues"];
    assert_eq!(m[0]["rotation"], "1/2");
    assert_eq!(m[0]["multiplicity"], 8);
    assert_eq!(m[1]["rotation"], "1/6");
}

#[test]
fn schwarz_table() {
    let out = run(&["schwarz"]);
    assert_eq!(code(&out), 0);
    let rows: Vec<SchwarzRow> = serde_json::from_slice(&out.stdout).unwrap();
    let got: Vec<(u64, String)> = rows.iter().map(|r| (r.n, r.q.to_string())).collect();
    let expect: Vec<(u64, String)> = [(1, "infinity"), (2, "10"), (3, "6"), (5, "4"), (9, "3")]
        .iter()
        .map(|&(n, q)| (n, q.to_string()))
        .collect();
    assert_eq!(got, expect);
    let wide = run(&["schwarz", "--max-n", "100"]);
    assert_eq!(wide.stdout, out.stdout);
}

#[test]
fn jacobi_a1_minus_varpi() {
    let out = run(&["jacobi", "--type", "A1", "--mu=-1"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let e: LaurentElement = serde_json::from_value(v["polynomial"].clone()).unwrap();
    let k = RatFunc::k();
    let expect = LaurentElement::from_terms([
        (trigdunkl_core::Weight(vec![-1]), RatFunc::one()),
        (trigdunkl_core::Weight(vec![1]), &k / &(&RatFunc::one() + &k)),
    ]);
    assert_eq!(e, expect);
    // the space-separated form parses too
    assert_eq!(run(&["jacobi", "--type", "A1", "--mu", "-1"]).stdout, out.stdout);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["special", "--type", "D5"][..],
        &["verify", "relations"][..],
        &["jacobi", "--type", "B2", "--mu", "1,-1"][..],
        &["roots", "--type", "F4"][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(code(&a), 0, "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn laurent_output_round_trips_through_input() {
    let dir = std::env::temp_dir().join(format!("trigdunkl-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let first = dir.join("jacobi.json");
    let out = run(&["jacobi", "--type", "A2", "--mu", "1,-1", "--out", first.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&first).unwrap()).unwrap();
    let e: LaurentElement = serde_json::from_value(v["polynomial"].clone()).unwrap();
    // reserialization is byte-stable
    assert_eq!(serde_json::to_value(&e).unwrap(), v["polynomial"]);

    let poly = dir.join("poly.json");
    std::fs::write(&poly, serde_json::to_string(&e).unwrap()).unwrap();
    let out = run(&["dunkl", "--type", "A2", "--input", poly.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    let back: LaurentElement = serde_json::from_value(v["input"].clone()).unwrap();
    assert_eq!(back, e);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_suite_reports() {
    let out = run(&["verify", "cross", "--type", "BC2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v[0]["suite"], "cross");
    assert_eq!(v[0]["passed"], true);
    assert!(v[0]["first_failure"].is_null());
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["jacobi", "--type", "A1"][..],
        &["jacobi", "--type", "A1", "--mu", "1,2"][..],
        &["special", "--type", "A2", "--k", "0.5"][..],
        &["special", "--type", "A2", "--k2", "1/3"][..],
        &["special", "--type", "BC2"][..],
        &["special", "--type", "A2", "--verify", "hermitian"][..],
        &["verify", "nonsense"][..],
        &["roots", "--type", "D3"][..],
        &["roots", "--type", "E"][..],
        &["frobnicate"][..],
    ] {
        let out = run(args);
        assert_eq!(code(&out), 2, "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn text_format() {
    let out = run(&["special", "--type", "A2", "--format", "text"]);
    assert_eq!(code(&out), 0);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.starts_with("A2 special exponents"));
    assert!(s.contains("verdicts: all hold"));
}
