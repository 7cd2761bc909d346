//! End-to-end tests of the `addax` binary: output schemas, exit codes,
//! and byte determinism.

use std::process::{Command, Output};

fn addax(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_addax"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn equation_worked_example() {
    let out = addax(&["hpair", "equation", "Q[x]/(x^3)", "--U", "x"]);
    let v = stdout_json(&out);
    assert_eq!(v["schema"], "addax/1");
    assert_eq!(v["degree"], 2);
    assert_eq!(v["equation"], "z0*z2 - 1/2*z1^2");
}

#[test]
fn flattened_command_names_work() {
    let nested = addax(&["hpair", "equation", "Q[x]/(x^4)", "--U", "x, x^2"]);
    let flat = addax(&["hpair-equation", "Q[x]/(x^4)", "--U", "x, x^2"]);
    assert_eq!(nested.stdout, flat.stdout);
    let v = stdout_json(&flat);
    assert_eq!(v["equation"], "z0^2*z3 - z0*z1*z2 + 1/3*z1^3");
}

#[test]
fn verify_table1_summary() {
    let out = addax(&["verify-table1", "--max-n", "5"]);
    let v = stdout_json(&out);
    assert_eq!(v["summary"], "8/8 rows matched");
    assert_eq!(v["matched"], 8);
}

#[test]
fn classify_reports_certificate() {
    let out = addax(&["hpair-classify", "Q[x]/(x^6)", "--U", "x, x^2, x^4, x^5"]);
    let v = stdout_json(&out);
    assert_eq!(v["finite_orbits"], false);
    assert_eq!(v["canonical_index"], 3);
    let cert = v["certificate"].as_str().unwrap();
    assert!(cert.contains("canonical index 3"), "{cert}");
}

#[test]
fn exit_code_contract() {
    // mathematical rejection: U does not generate
    let out = addax(&["hpair", "degree", "Q[x]/(x^4)", "--U", "x^2, x^3"]);
    assert_eq!(out.status.code(), Some(1));
    // input error: syntax error with position
    let out = addax(&["hpair", "degree", "Q[x]/(", "--U", "x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("at byte"));
    // mathematical rejection: non-local quotient
    let out = addax(&["algebra", "info", "Q[x]/(x^2 - 1)"]);
    assert_eq!(out.status.code(), Some(1));
    // input error: unknown order
    let out = addax(&["algebra", "info", "Q[x]/(x^3)", "--order", "fancy"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_bytes_are_deterministic() {
    let args = [
        "verify-invariants",
        "--max-n",
        "3",
        "--seed",
        "9",
        "--exp-log-samples",
        "20",
        "--limit-samples",
        "5",
    ];
    let a = addax(&args);
    let b = addax(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    // the sequential path produces the same bytes
    let mut seq_args = args.to_vec();
    seq_args.push("--sequential");
    let c = addax(&seq_args);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn structure_table_input_roundtrip() {
    // dump the chain algebra as JSON and feed it back through --table
    let dir = std::path::Path::new(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join("chain3.json");
    let table = serde_json::json!({
        "dim": 4,
        "basis": ["1", "x", "x^2", "x^3"],
        "table": [
            [1, 1, ["0", "0", "1", "0"]],
            [1, 2, ["0", "0", "0", "1"]],
            [1, 3, ["0", "0", "0", "0"]],
            [2, 2, ["0", "0", "0", "0"]],
            [2, 3, ["0", "0", "0", "0"]],
            [3, 3, ["0", "0", "0", "0"]],
        ],
    });
    std::fs::write(&path, table.to_string()).unwrap();
    let out = addax(&[
        "hpair",
        "equation",
        "--table",
        path.to_str().unwrap(),
        "--U",
        "x, x^2",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["equation"], "z0^2*z3 - z0*z1*z2 + 1/3*z1^3");
    // coordinate-vector form of U gives the same pair
    let out2 = addax(&[
        "hpair",
        "equation",
        "--table",
        path.to_str().unwrap(),
        "--U",
        "[0,1,0,0],[0,0,1,0]",
    ]);
    assert_eq!(out.stdout, out2.stdout);
}

#[test]
fn invalid_table_is_rejected() {
    let dir = std::path::Path::new(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join("bad.json");
    // x*x = 1 is not a local algebra
    let table = serde_json::json!({
        "dim": 2,
        "basis": ["1", "x"],
        "table": [[1, 1, ["1", "0"]]],
    });
    std::fs::write(&path, table.to_string()).unwrap();
    let out = addax(&["algebra", "info", "--table", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("axioms"));
}

#[test]
fn orbits_poset_shape() {
    let out = addax(&["orbits", "poset", "Q[x]/(x^5)", "--U", "x, x^2, x^3"]);
    let v = stdout_json(&out);
    assert_eq!(v["orbits"].as_array().unwrap().len(), 4);
    assert_eq!(v["closure_relations"].as_array().unwrap().len(), 6);
    // infinite-orbit pair is rejected with exit 1
    let out = addax(&["orbits", "poset", "Q[x]/(x^5)", "--U", "x, x^3, x^4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn orbits_op_check_reports_search_results() {
    let out = addax(&["orbits", "op-check", "Q[x]/(x^3)", "--U", "x"]);
    let v = stdout_json(&out);
    assert_eq!(v["all_reached"], true);
    let out = addax(&["orbits", "op-check", "Q[x,y]/(x^2, y^2)", "--U", "x, y"]);
    let v = stdout_json(&out);
    assert_eq!(v["all_reached"], true);
    assert_eq!(v["orbits"].as_array().unwrap().len(), 3);
    // n = 5: the orbit of x^2 is not reached under the structured search
    let out = addax(&[
        "orbits",
        "op-check",
        "Q[x]/(x^6)",
        "--U",
        "x, x^2, x^3, x^4",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["all_reached"], false);
}

#[test]
fn orbits_report_samples_nonclassified_pairs() {
    let out = addax(&[
        "orbits",
        "report",
        "Q[y,z]/(y^4, z^2, z*y)",
        "--U",
        "y, y^2, z",
    ]);
    let v = stdout_json(&out);
    let orbits = v["orbits"].as_array().unwrap();
    assert!(orbits.len() >= 4);
    assert_eq!(orbits[0]["kind"], "open");
    assert_eq!(v["fixed_locus"]["forces_infinitely_many_orbits"], true);
    assert!(v["note"].as_str().unwrap().contains("sampled"));
}

#[test]
fn dual_and_reduce_commands() {
    let out = addax(&["hpair", "dual", "Q[x]/(x^5)", "--U", "x, x^2, x^4"]);
    let v = stdout_json(&out);
    assert_eq!(v["finite_orbits"], false);
    assert_eq!(v["dual_algebra"]["basis"].as_array().unwrap().len(), 5);

    let out = addax(&["hpair", "reduce", "Q[x]/(x^5)", "--U", "x, x^2, x^4"]);
    let v = stdout_json(&out);
    assert_eq!(v["nondegenerate"], true);
    assert_eq!(v["quotient_algebra"]["dim"], 4);
    // reducing a nondegenerate pair is a mathematical rejection
    let out = addax(&["hpair", "reduce", "Q[x]/(x^5)", "--U", "x, x^2, x^3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn pretty_flag_pretty_prints() {
    let out = addax(&["--pretty", "hpair", "degree", "Q[x]/(x^3)", "--U", "x"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("{\n"));
}
