//! End-to-end tests of the command-line binary: frozen outputs, format
//! switching, file output, environment overrides, and exit codes.

use std::process::{Command, Output};

fn facealg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_facealg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = facealg(args);
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    facealg(args).status.code().expect("exit code")
}

#[test]
fn lie_expands_the_two_cycle_character_in_schur_basis() {
    assert_eq!(stdout_of(&["lie", "--lambda", "2"]), "s[1,1]\n");
}

#[test]
fn lie_power_sum_basis_mentions_power_sums() {
    let text = stdout_of(&["lie", "--lambda", "2", "--basis", "p"]);
    assert!(text.contains("p[2]") && text.contains("p[1,1]"), "{text}");
}

#[test]
fn lie_json_round_trips_through_the_documented_schema() {
    let json = stdout_of(&["lie", "--lambda", "3,1", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["lambda"], serde_json::json!([3, 1]));
    assert_eq!(value["expansion"]["basis"], "s");
    let terms = value["expansion"]["terms"].as_array().unwrap();
    assert!(!terms.is_empty());
    for term in terms {
        assert!(term["index"].is_array());
        // Schur expansions of Lie characters have positive integer
        // coefficients over denominator one.
        assert_eq!(term["denominator"], "1");
        let numer: i64 = term["numerator"].as_str().unwrap().parse().unwrap();
        assert!(numer > 0);
    }
}

#[test]
fn lyndon_reports_factors_and_type() {
    let text = stdout_of(&["lyndon", "--word", "1,2,1"]);
    assert_eq!(text, "factors: (1,2)(1)\ntype: 3,1\n");
    let long = stdout_of(&["lyndon", "--word", "2,4,3,1,1,2,2,2,3,1,1,2,1"]);
    assert!(long.contains("factors: (2,4,3)(1,1,2,2,2,3)(1,1,2)(1)"), "{long}");
}

#[test]
fn lyndon_json_lists_every_factor() {
    let json = stdout_of(&["lyndon", "--word", "1,1,2", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["factors"], serde_json::json!([[1, 1, 2]]));
    assert_eq!(value["lyndon_type"], serde_json::json!([4]));
}

#[test]
fn table_at_degree_two_matches_the_derived_cells() {
    let json = stdout_of(&["table", "--n", "2", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    let cells = value["cells"].as_array().unwrap();
    // 2x2 grid of boxes, three of them nonempty.
    assert_eq!(cells.len(), 4);
    let nonempty: Vec<_> =
        cells.iter().filter(|c| !c["entries"].as_array().unwrap().is_empty()).collect();
    assert_eq!(nonempty.len(), 3);
    let find = |nu: &[u64], mu: &[u64]| {
        cells
            .iter()
            .find(|c| c["nu"] == serde_json::json!(nu) && c["mu"] == serde_json::json!(mu))
            .unwrap()["entries"]
            .clone()
    };
    assert_eq!(
        find(&[2], &[2]),
        serde_json::json!([{ "lambda": [2], "multiplicity": 1 }])
    );
    assert_eq!(
        find(&[2], &[1, 1]),
        serde_json::json!([{ "lambda": [1, 1], "multiplicity": 1 }])
    );
    assert_eq!(
        find(&[1, 1], &[1, 1]),
        serde_json::json!([{ "lambda": [2], "multiplicity": 1 }])
    );
    assert_eq!(find(&[1, 1], &[2]), serde_json::json!([]));
}

#[test]
fn table_text_is_byte_stable_across_runs() {
    let first = stdout_of(&["table", "--n", "4"]);
    let second = stdout_of(&["table", "--n", "4"]);
    assert_eq!(first, second);
    assert!(first.contains("4 (6); 3,1 (6); 2,2 (3); 2,1,1 (3)"), "{first}");
}

#[test]
fn table_csv_has_flat_rows() {
    let csv = stdout_of(&["table", "--n", "3", "--format", "csv"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "nu,mu,lambda,multiplicity");
    assert!(lines.contains(&"\"3\",\"2,1\",\"3\",1"), "{csv}");
    // Every data row has exactly four fields: three quoted, one bare.
    for line in &lines[1..] {
        assert_eq!(line.matches('"').count(), 6, "{line}");
    }
}

#[test]
fn cartan_row_for_two_one_one_is_frozen() {
    let json = stdout_of(&["cartan", "--n", "4", "--format", "json"]);
    let entries: Vec<serde_json::Value> = serde_json::from_str(&json).unwrap();
    let row: Vec<_> = entries
        .iter()
        .filter(|e| e["mu"] == serde_json::json!([2, 1, 1]))
        .map(|e| (e["lambda"].clone(), e["value"].as_u64().unwrap()))
        .collect();
    // Entries arrive in key order: λ = (4), (3,1), (2,1,1).
    assert_eq!(
        row,
        vec![
            (serde_json::json!([4]), 1),
            (serde_json::json!([3, 1]), 1),
            (serde_json::json!([2, 1, 1]), 1),
        ]
    );
}

#[test]
fn verify_reports_the_face_count_at_degree_three() {
    let json = stdout_of(&["verify", "--n", "3", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["n"], 3);
    assert_eq!(value["total_dimension"], 13);
    assert_eq!(value["pairs"].as_array().unwrap().len(), 9);
    let text = stdout_of(&["verify", "--n", "3"]);
    assert!(text.contains("all pairs match the series"), "{text}");
}

#[test]
fn out_flag_writes_the_payload_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.json");
    let stdout = stdout_of(&["table", "--n", "2", "--format", "json", "--out"]
        .iter()
        .chain(&[path.to_str().unwrap()])
        .copied()
        .collect::<Vec<_>>()
        .as_slice());
    assert!(stdout.contains("wrote"), "{stdout}");
    let from_file = std::fs::read_to_string(&path).unwrap();
    let direct = stdout_of(&["table", "--n", "2", "--format", "json"]);
    assert_eq!(from_file, direct);
}

#[test]
fn format_env_variable_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_facealg"))
        .args(["lie", "--lambda", "2"])
        .env("FACEALG_FORMAT", "json")
        .output()
        .unwrap();
    assert!(out.status.success());
    let value: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("JSON because of FACEALG_FORMAT");
    assert_eq!(value["lambda"], serde_json::json!([2]));
}

#[test]
fn caps_exit_with_usage_code() {
    assert_eq!(exit_code(&["verify", "--n", "9"]), 2);
    assert_eq!(exit_code(&["verify", "--n", "6"]), 2, "degree six requires --cap-faces 6");
    assert_eq!(exit_code(&["verify", "--n", "6", "--cap-faces", "7"]), 2, "hard cap is 6");
    assert_eq!(exit_code(&["table", "--n", "0"]), 2);
    assert_eq!(exit_code(&["table", "--n", "9"]), 2);
    assert_eq!(exit_code(&["cartan", "--n", "9"]), 2);
    assert_eq!(exit_code(&["sign", "--n", "7"]), 2);
    assert_eq!(exit_code(&["lie", "--lambda", "11"]), 2);
    assert_eq!(exit_code(&["lie", "--lambda", "0"]), 2);
    assert_eq!(exit_code(&["lyndon", "--word", "1,0"]), 2);
    assert_eq!(exit_code(&["--jobs", "0", "table", "--n", "2"]), 2);
}

#[test]
fn runtime_failures_exit_with_code_one() {
    assert_eq!(
        exit_code(&["verify", "--n", "2", "--out", "/nonexistent_dir_xyz/report.json"]),
        1
    );
}

#[test]
fn sign_output_is_frozen_through_degree_six() {
    assert_eq!(
        stdout_of(&["sign", "--n", "4"]),
        "degree 4: sign-isotypic dimension 1, simple label 2,2\n"
    );
    let json = stdout_of(&["sign", "--n", "6", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["dimension"], 1);
    assert_eq!(value["label"], serde_json::json!([2, 2, 2]));
    let five = stdout_of(&["sign", "--n", "5", "--format", "csv"]);
    assert_eq!(five, "n,dimension,label\n5,1,\"2,2,1\"\n");
}

#[test]
fn jobs_flag_is_accepted() {
    let text = stdout_of(&["--jobs", "1", "cartan", "--n", "3"]);
    assert!(text.contains("both routes agree"), "{text}");
}
