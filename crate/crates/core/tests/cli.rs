use std::process::{Command, Output};

fn edgereg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edgereg")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = edgereg(&full);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn reg_of_cycle_powers() {
    let v = json(&["reg", "cycle:5", "--power", "2"]);
    assert_eq!(v["schema"], "edgereg.reg/1");
    assert_eq!(v["regularity"], 4);
    assert_eq!(v["quotient_regularity"], 3);
}

#[test]
fn reg_of_inline_ideal_and_csv_table() {
    let out = edgereg(&["--format", "csv", "reg", "x1*x2,x2*x3", "--betti"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("i,j,beta\n0,2,2\n1,3,1\n"));
}

#[test]
fn reg_reads_graph_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c6.txt");
    std::fs::write(&path, "n 6\n1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n").unwrap();
    let v = json(&["reg", path.to_str().unwrap()]);
    assert_eq!(v["regularity"], 3);
}

#[test]
fn colon_lists_generators_with_certificates() {
    let v = json(&["colon", "cycle:5", "--product", "2-3"]);
    assert_eq!(v["schema"], "edgereg.colon/1");
    let text = v.to_string();
    assert!(text.contains("x1*x4"), "{text}");
}

#[test]
fn nu_and_even_connect() {
    let v = json(&["nu", "path:7"]);
    assert_eq!(v["induced_matching_number"], 2);
    let out = edgereg(&["even-connect", "cycle:6", "--product", "2-3", "--pair", "1", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("x1,x2,x3,x4"));
}

#[test]
fn polarize_names_new_variables() {
    let out = edgereg(&["polarize", "x1^2*x2,x2^3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("y2_2"), "{}", stdout(&out));
}

#[test]
fn verify_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = edgereg(&["verify", "forest", "--max-n", "5", "--max-s", "2", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["schema"], "edgereg.verify/1");
    assert_eq!(report["verdict"], "pass");
    assert_eq!(report["failure_count"], 0);
}

#[test]
fn exit_codes() {
    assert_eq!(edgereg(&["reg", "cycle:2"]).status.code(), Some(2));
    assert_eq!(edgereg(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(edgereg(&["reg", "x1^8"]).status.code(), Some(3));
    assert_eq!(edgereg(&["reg", "cycle:6", "--budget-multidegrees", "5"]).status.code(), Some(3));
}
