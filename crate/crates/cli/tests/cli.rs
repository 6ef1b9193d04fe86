use std::process::{Command, Output};

fn kekule(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kekule")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table_tsv_and_json() {
    let o = kekule(&["table", "--max-n", "2", "--max-m", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "n\\m\t0\t1\t2\n0\t1\t1\t1\n1\t1\t2\t3\n2\t1\t3\t6\n");
    let o = kekule(&["table", "--max-n", "5", "--max-m", "9", "--format", "json"]);
    let rows: Vec<Vec<String>> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rows[5][9], "17017");
    assert_eq!(rows[4][6], "658");
}

#[test]
fn m_array_output() {
    let o = kekule(&["m-array", "--max-i", "5", "--max-j", "5", "--format", "json"]);
    assert!(o.status.success());
    let rows: Vec<Vec<String>> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rows[5][5], "1019051");
    assert_eq!(rows[2][3], rows[3][2]);
}

#[test]
fn gf_json() {
    let o = kekule(&["gf", "--kind", "col", "--index", "2"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kind"], "col");
    assert_eq!(v["factored_den"], "P_3(x)");
    let o = kekule(&["gf", "--kind", "m-row", "--index", "2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["factored_den"], "P_1(x)^3 * P_2(x)^2 * P_3(x)");
}

#[test]
fn oracle_values_and_exit_codes() {
    let o = kekule(&["oracle", "--model", "lattice", "--n", "4", "--m", "2"]);
    assert_eq!(stdout(&o), "31\n");
    let o = kekule(&["oracle", "--model", "cycle", "--n", "4", "--m", "1"]);
    assert_eq!(stdout(&o), "7\n");

    let budget = kekule(&["oracle", "--model", "path", "--n", "20", "--m", "20"]);
    assert_eq!(budget.status.code(), Some(3));
    assert!(budget.stdout.is_empty());
    assert!(!budget.stderr.is_empty());

    assert_eq!(kekule(&["oracle", "--model", "cycle", "--n", "2", "--m", "1"]).status.code(), Some(2));
    assert_eq!(kekule(&["table", "--max-n", "x", "--max-m", "1"]).status.code(), Some(2));
    assert_eq!(kekule(&["gf", "--kind", "m-row", "--index", "99"]).status.code(), Some(2));
}

#[test]
fn verify_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = kekule(&["verify", "--profile", "quick", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let checks = report["checks"].as_array().unwrap();
    let ids: Vec<&str> = checks.iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert!(checks.iter().all(|c| c["status"] != "fail"));
    let noted = checks.iter().filter(|c| c["status"] == "discrepancy-noted").count();
    assert_eq!(noted, 3);
}

#[test]
fn verify_fails_under_mutation() {
    let o = kekule(&["verify", "--mutation", "exchange-is-identity"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL  matrix.exchange-identities"));
}
