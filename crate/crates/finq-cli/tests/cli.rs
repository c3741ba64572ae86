//! End-to-end tests of the finq binary: frozen report bytes, exit codes,
//! and determinism across runs and thread counts.

use std::process::{Command, Output};

fn finq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_finq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn finq_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_finq"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn ckm_fixture() -> String {
    format!(
        "{}/../finq/fixtures/ckm_magnitudes.json",
        env!("CARGO_MANIFEST_DIR")
    )
}

#[test]
fn born_full_report_bytes_are_frozen() {
    let out = finq(&["born", "--m", "1,3,2", "--n", "1,1,2", "--subspace", "full"]);
    assert!(out.status.success());
    let expected = "{\n  \"m\": [\n    1,\n    3,\n    2\n  ],\n  \"n\": [\n    1,\n    1,\n    2\n  ],\n  \"probability\": \"16/21\",\n  \"subspace\": \"full\"\n}\n";
    assert_eq!(String::from_utf8_lossy(&out.stdout), expected);
    assert!(out.stderr.is_empty());
}

#[test]
fn chartab_reports_are_deterministic() {
    let args = ["chartab", "--degree", "3", "(2,3)", "(1,3,2)"];
    let a = finq(&args);
    let b = finq(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let report = stdout_json(&a);
    assert_eq!(report["dimensions"], serde_json::json!([1, 1, 2]));
    assert_eq!(report["order"], serde_json::json!(6));
    let sizes: Vec<u64> = report["classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["size"].as_u64().unwrap())
        .collect();
    assert_eq!(sizes, [1, 3, 2]);
    let one = serde_json::json!({"coeffs": ["1"], "conductor": 1});
    let rows = report["rows"].as_array().unwrap();
    assert_eq!(rows[0], serde_json::json!([one, one, one]));
}

#[test]
fn chartab_trivial_group() {
    let report = stdout_json(&finq(&["chartab", "--degree", "1", "()"]));
    assert_eq!(
        report["rows"],
        serde_json::json!([[{"coeffs": ["1"], "conductor": 1}]])
    );
    assert_eq!(report["order"], serde_json::json!(1));
}

#[test]
fn group_report_carries_class_coefficients() {
    let report = stdout_json(&finq(&["group", "--degree", "3", "(2,3)", "(1,3,2)"]));
    assert_eq!(report["order"], serde_json::json!(6));
    assert_eq!(report["exponent"], serde_json::json!(6));
    let c = &report["class_coefficients"];
    assert_eq!(c[1][1], serde_json::json!([3, 0, 3]));
    assert_eq!(c[1][2], serde_json::json!([0, 2, 0]));
    assert_eq!(c[2][2], serde_json::json!([2, 0, 1]));
}

#[test]
fn group_degree_is_inferred_from_generators() {
    let report = stdout_json(&finq(&["group", "(1,2,3,4)"]));
    assert_eq!(report["degree"], serde_json::json!(4));
    assert_eq!(report["order"], serde_json::json!(4));
}

#[test]
fn decompose_natural_actions() {
    let report = stdout_json(&finq(&["decompose", "--degree", "3", "(2,3)", "(1,3,2)"]));
    assert_eq!(report["multiplicities"], serde_json::json!([1, 0, 1]));
    assert_eq!(report["permutation_character"], serde_json::json!([3, 1, 0]));
    let spans: Vec<u64> = report["blocks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b["span"].as_u64().unwrap())
        .collect();
    assert_eq!(spans, [1, 2]);

    let report = stdout_json(&finq(&["decompose", "(1,2,3)"]));
    let blocks = report["blocks"].as_array().unwrap();
    assert_eq!(blocks.len(), 3);
    assert!(blocks.iter().all(|b| b["dimension"] == serde_json::json!(1)));
}

#[test]
fn decompose_coset_action_matches_natural() {
    let coset = stdout_json(&finq(&[
        "decompose",
        "--action",
        "coset",
        "--subgroup",
        "(2,3)",
        "--degree",
        "3",
        "(2,3)",
        "(1,3,2)",
    ]));
    assert_eq!(coset["degree"], serde_json::json!(3));
    assert_eq!(coset["multiplicities"], serde_json::json!([1, 0, 1]));
    // coset flag mismatches are input errors
    let out = finq(&["decompose", "--action", "coset", "(1,2)"]);
    assert_eq!(out.status.code(), Some(2));
    let out = finq(&["decompose", "--subgroup", "(1,2)", "(1,2)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn born_reports_match_invariant_values() {
    let report = stdout_json(&finq(&[
        "born", "--m", "1,3,2", "--n", "1,1,2", "--subspace", "complement",
    ]));
    assert_eq!(report["probability"], serde_json::json!("0"));

    let report = stdout_json(&finq(&[
        "born", "--m", "1,1,2", "--n", "1,1,2", "--subspace", "complement",
    ]));
    assert_eq!(report["probability"], serde_json::json!("1"));

    // a symmetry group on the same points is validated and reported
    let report = stdout_json(&finq(&[
        "born", "--m", "1,3,2", "--n", "1,1,2", "--float", "(1,2,3)",
    ]));
    assert_eq!(report["group_order"], serde_json::json!(3));
    assert_eq!(report["probability"], serde_json::json!("16/21"));
    let approx = report["probability_float"].as_f64().unwrap();
    assert!((approx - 16.0 / 21.0).abs() < 1e-12);
}

#[test]
fn interfere_is_deterministic_across_thread_counts() {
    let one = finq(&["interfere", "--degree", "3", "--bound", "2", "--jobs", "1"]);
    let four = finq(&["interfere", "--degree", "3", "--bound", "2", "--jobs", "4"]);
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);

    let report = stdout_json(&one);
    assert_eq!(report["count"], serde_json::json!(72));
    assert_eq!(report["solutions"][0], serde_json::json!([[0, 0, 1], [0, 2, 1]]));

    let empty = stdout_json(&finq(&["interfere", "--degree", "2", "--bound", "2"]));
    assert_eq!(empty["count"], serde_json::json!(0));
    assert_eq!(empty["solutions"], serde_json::json!([]));
}

#[test]
fn mixing_tribimaximal_report_bytes_are_frozen() {
    let out = finq(&["mixing", "--tribimaximal", "--pattern", "--compare", "identity"]);
    assert!(out.status.success());
    let expected = concat!(
        "{\n",
        "  \"compare\": \"identity\",\n",
        "  \"deviation\": \"2/3\",\n",
        "  \"pattern\": {\n",
        "    \"bimaximal\": true,\n",
        "    \"trimaximal\": true,\n",
        "    \"upper_right_zero\": true\n",
        "  },\n",
        "  \"table\": {\n",
        "    \"kind\": \"exact\",\n",
        "    \"moduli_squared\": [\n",
        "      [\n        \"2/3\",\n        \"1/3\",\n        \"0\"\n      ],\n",
        "      [\n        \"1/6\",\n        \"1/3\",\n        \"1/2\"\n      ],\n",
        "      [\n        \"1/6\",\n        \"1/3\",\n        \"1/2\"\n      ]\n",
        "    ]\n",
        "  },\n",
        "  \"tolerance\": 0.0\n",
        "}\n",
    );
    assert_eq!(String::from_utf8_lossy(&out.stdout), expected);
}

#[test]
fn mixing_measured_table_from_file() {
    let fixture = ckm_fixture();
    let report = stdout_json(&finq(&[
        "mixing", &fixture, "--pattern", "--tolerance", "0.05", "--compare", "identity", "--float",
    ]));
    assert_eq!(report["deviation"], serde_json::json!(0.051324000000000036));
    assert_eq!(
        report["pattern"],
        serde_json::json!({"bimaximal": false, "trimaximal": false, "upper_right_zero": true})
    );
    assert_eq!(report["table"]["kind"], serde_json::json!("measured"));
    let sq = report["moduli_squared_float"][0][0].as_f64().unwrap();
    assert_eq!(sq, 0.948676);
    // exact tables reject a sloppy tolerance
    let out = finq(&["mixing", "--tribimaximal", "--pattern", "--tolerance", "0.1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_codes_separate_failure_kinds() {
    // unparsable generator: input error
    let out = finq(&["group", "--degree", "3", "(1,2,3,4)"]);
    assert_eq!(out.status.code(), Some(2));
    // cap exceeded: resource error
    let out = finq_env(&["group", "(1,2,3,4)", "(1,2)"], "FINQ_CAP", "5");
    assert_eq!(out.status.code(), Some(3));
    // generous cap succeeds
    let out = finq_env(&["group", "(1,2,3,4)", "(1,2)"], "FINQ_CAP", "24");
    assert_eq!(out.status.code(), Some(0));
    // malformed environment cap: input error
    let out = finq_env(&["group", "(1,2)"], "FINQ_CAP", "many");
    assert_eq!(out.status.code(), Some(2));
    // uniform state in the complement: input error
    let out = finq(&["born", "--m", "1,1,1", "--n", "1,2,3", "--subspace", "complement"]);
    assert_eq!(out.status.code(), Some(2));
    // missing required arguments: usage error from the parser
    let out = finq(&["group"]);
    assert_eq!(out.status.code(), Some(2));
    // mixing needs a table source
    let out = finq(&["mixing", "--pattern"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_flag_writes_the_same_bytes() {
    let direct = finq(&["chartab", "(1,2,3)"]);
    assert!(direct.status.success());
    let path = std::env::temp_dir().join(format!("finq-cli-test-{}.json", std::process::id()));
    let path_str = path.to_str().unwrap();
    let filed = finq(&["chartab", "(1,2,3)", "--output", path_str]);
    assert!(filed.status.success());
    assert!(filed.stdout.is_empty());
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, direct.stdout);
    std::fs::remove_file(&path).ok();
}

#[test]
fn float_flag_adds_rows_float_to_chartab() {
    let plain = stdout_json(&finq(&["chartab", "(1,2,3)"]));
    assert!(plain.get("rows_float").is_none());
    let report = stdout_json(&finq(&["chartab", "(1,2,3)", "--float"]));
    let rf = report["rows_float"].as_array().unwrap();
    assert_eq!(rf.len(), 3);
    // row for the trivial character is all ones
    for entry in rf[0].as_array().unwrap() {
        let re = entry[0].as_f64().unwrap();
        let im = entry[1].as_f64().unwrap();
        assert!((re - 1.0).abs() < 1e-12 && im.abs() < 1e-12);
    }
}

#[test]
fn version_flag_exits_cleanly() {
    let out = finq(&["--version"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("finq"));
}
