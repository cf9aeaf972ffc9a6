use std::process::{Command, Output};

use permcode::report::parse_csv;

fn permcode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permcode"))
        .args(args)
        .env_remove("PERMCODE_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn pmax_three_two_prints_five_sixths() {
    let o = permcode(&["pmax", "--n", "3", "--d", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l == "5/6 (0.833333333333)"), "{text}");
    for key in ["# version=", "# seed=0", "# method=exact-enumeration", "# cap=66"] {
        assert!(text.contains(key), "missing {key} in {text}");
    }
}

#[test]
fn sweep_csv_has_three_increasing_rows_and_round_trips() {
    let o = permcode(&["sweep", "--r", "0.5", "--n", "10,20,30", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    let (meta, rows) = parse_csv(&text).unwrap();
    assert_eq!(rows.len(), 3);
    assert!(rows.windows(2).all(|w| w[0].p_quantum < w[1].p_quantum));
    assert!(rows.windows(2).all(|w| w[0].p_quantum_exact < w[1].p_quantum_exact));
    assert_eq!(meta.entries["seed"], "0");
    assert_eq!(rows[0].p_quantum_exact.as_ref().unwrap().to_string(), "54263/80640");
    // Re-serializing the parsed report reproduces the emitted bytes.
    assert_eq!(permcode::report::write_csv(&meta, &rows), text);
}

#[test]
fn verify_n3_emits_passing_json() {
    let o = permcode(&["verify", "--suite", "n3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["all_passed"], true);
    let checks = doc["checks"].as_array().unwrap();
    assert!(checks.len() >= 10);
    assert!(checks.iter().all(|c| c["pass"] == true));
    assert_eq!(doc["metadata"]["method"], "matrix-simulation");
}

#[test]
fn identical_config_is_byte_identical() {
    let runs = [
        vec!["sweep", "--r", "0.5", "--n", "10,70", "--samples", "500", "--seed", "7", "--format", "csv"],
        vec!["sample", "--n", "12", "--samples", "20", "--seed", "3", "--format", "json"],
        vec!["pmax", "--n", "20", "--d", "3", "--method", "schur-weyl", "--samples", "2000", "--seed", "9"],
        vec!["classical", "--n", "4", "--d", "2", "--trials", "5000", "--seed", "1"],
    ];
    for args in runs {
        let a = permcode(&args);
        let b = permcode(&args);
        assert_eq!(a.status.code(), Some(0), "{args:?}: {}", stderr(&a));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(!stdout(&a).to_lowercase().contains("timestamp"));
    }
}

#[test]
fn seed_changes_sampled_output() {
    let a = permcode(&["sample", "--n", "30", "--samples", "10", "--seed", "1"]);
    let b = permcode(&["sample", "--n", "30", "--samples", "10", "--seed", "2"]);
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn usage_errors_exit_one_and_name_the_flag() {
    let o = permcode(&["pmax", "--n", "0", "--d", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("--n") && err.contains("1..="), "{err}");

    let o = permcode(&["sweep", "--r", "-1", "--n", "10"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("--r"));

    let o = permcode(&["sweep", "--r", "0.5", "--n", "10,,x"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("--n") && stderr(&o).contains("1..="), "{}", stderr(&o));

    let o = permcode(&["verify", "--suite", "bogus"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("--suite"));

    let o = permcode(&["pmax", "--n", "3", "--d", "2", "--format", "xml"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("--format"));
}

#[test]
fn capacity_errors_exit_one() {
    let o = permcode(&["pmax", "--n", "12", "--d", "3", "--method", "exact", "--cap", "10"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("--cap"), "{}", stderr(&o));
}

#[test]
fn environment_overrides_cap() {
    let o = Command::new(env!("CARGO_BIN_EXE_permcode"))
        .args(["pmax", "--n", "12", "--d", "3", "--method", "exact"])
        .env("PERMCODE_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));

    let o = Command::new(env!("CARGO_BIN_EXE_permcode"))
        .args(["pmax", "--n", "3", "--d", "2"])
        .env("PERMCODE_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("# cap=5"));

    let o = Command::new(env!("CARGO_BIN_EXE_permcode"))
        .args(["pmax", "--n", "3", "--d", "2"])
        .env("PERMCODE_CAP", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("PERMCODE_CAP"));
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let o = permcode(&["pmax", "--n", "4", "--d", "2", "--format", "json", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["report"]["p_quantum"]["value"], "1/2");
    assert_eq!(doc["report"]["dim_w"], "12");
}

#[test]
fn classical_and_bounds_commands() {
    let o = permcode(&["classical", "--n", "3", "--d", "2"]);
    assert!(stdout(&o).contains("1/2 (0.500000000000)"));

    let o = permcode(&["bounds", "--kind", "kerov", "--n", "20", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["holds"], true);
    assert_eq!(doc["report"]["diagrams"], 627);

    let o = permcode(&["bounds", "--kind", "erdos", "--n", "100", "--format", "csv"]);
    let text = stdout(&o);
    assert!(text.contains("190569292"), "{text}");

    // The short-column lemma has a small counterexample at N = 3.
    let o = permcode(&["bounds", "--kind", "lemma1", "--n", "3", "--d", "2"]);
    assert!(stdout(&o).contains("[1,1,1]"));
}

#[test]
fn help_exits_zero() {
    assert_eq!(permcode(&["--help"]).status.code(), Some(0));
    assert_eq!(permcode(&["--version"]).status.code(), Some(0));
}
