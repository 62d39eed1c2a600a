use std::process::{Command, Output};

fn hanoi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hanoi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn solve_classical_three() {
    let out = hanoi(&["solve", "--model", "classical", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.contains('>')).count(), 7);
    assert!(text.ends_with("length 7\n"));
}

#[test]
fn solve_json_schema() {
    let out = hanoi(&[
        "solve",
        "--model",
        "relaxed",
        "--distance",
        "1",
        "--n",
        "4",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["length"], 9);
    assert_eq!(v["method"], "a-symmetric");
    assert_eq!(v["model"]["distance"], 1);
    assert_eq!(v["moves"][0], serde_json::json!([1, 2]));
    assert_eq!(v["moves"].as_array().unwrap().len(), 9);
}

#[test]
fn solve_methods_agree_with_oracle() {
    let bfs = hanoi(&[
        "solve", "--model", "digraph", "--edges", "cycle", "--n", "4", "--from", "2", "--to", "1",
        "--method", "bfs",
    ]);
    let directed = hanoi(&[
        "solve", "--model", "digraph", "--edges", "cycle", "--n", "4", "--from", "2", "--to", "1",
    ]);
    let last = |o: &Output| stdout(o).lines().last().unwrap().to_string();
    assert_eq!(last(&bfs), "length 59");
    assert_eq!(last(&directed), "length 59");
}

#[test]
fn table_linear_graph() {
    let out = hanoi(&[
        "table",
        "--model",
        "digraph",
        "--edges",
        "1>2,2>1,1>3,3>1",
        "--n",
        "3",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,N12,N21,N13,N31,N23,N32"));
    let row3: Vec<&str> = lines.nth(3).unwrap().split(',').collect();
    assert_eq!(row3[5], "26");
}

#[test]
fn table_json_has_flags() {
    let out = hanoi(&[
        "table",
        "--model",
        "digraph",
        "--edges",
        "five-edge",
        "--n",
        "4",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["class"], "five-edge");
    assert_eq!(v["rows"][4]["closed_form"], "n/a");
    assert_eq!(v["rows"][4]["N21"], 47);
}

#[test]
fn graphs_enumerate_lists_five_classes() {
    let out = hanoi(&["graphs", "enumerate"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let headers: Vec<&str> = text.lines().filter(|l| !l.starts_with(' ')).collect();
    assert_eq!(headers.len(), 5);
    let v: serde_json::Value = serde_json::from_str(&stdout(&hanoi(&[
        "graphs",
        "enumerate",
        "--format",
        "json",
    ])))
    .unwrap();
    let total: usize = v
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["members"].as_array().unwrap().len())
        .sum();
    assert_eq!(total, 18);
}

#[test]
fn conjecture_csv() {
    let out = hanoi(&["conjecture", "--distance", "1", "--n-max", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("n,bfs_std,bfs_any,a_conj,b_conj,len_a_sym,len_q,match\n"));
    assert!(text.contains("4,9,6,9,6,9,"));
    assert_eq!(text.matches("MATCH").count(), 5);
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "--suite", "graphs", "--n", "4"][..],
        &["verify", "--suite", "relaxed", "--n", "6"][..],
        &["verify", "--suite", "claims", "--n", "5"][..],
    ] {
        let out = hanoi(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", stdout(&out));
    }
    let out = hanoi(&[
        "verify", "--suite", "claims", "--n", "4", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let first = &v.as_array().unwrap()[0];
    for key in ["suite", "params", "pass", "counterexamples"] {
        assert!(first.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["solve", "--model", "relaxed", "--n", "3"][..],
        &[
            "solve",
            "--model",
            "classical",
            "--distance",
            "1",
            "--n",
            "3",
        ][..],
        &["solve", "--model", "digraph", "--n", "3"][..],
        &[
            "solve", "--model", "digraph", "--edges", "1>2,2>3", "--n", "3",
        ][..],
        &["solve", "--n", "3", "--from", "2", "--to", "2"][..],
        &["solve", "--n", "3", "--from", "4"][..],
        &["solve", "--n", "40"][..],
        &["solve", "--n", "300", "--method", "bfs"][..],
        &[
            "solve",
            "--model",
            "relaxed",
            "--distance",
            "1",
            "--n",
            "30",
            "--method",
            "bfs",
        ][..],
        &[
            "solve",
            "--model",
            "classical",
            "--n",
            "3",
            "--method",
            "zeta",
        ][..],
        &[
            "table",
            "--model",
            "custom",
            "--edges",
            "cycle",
            "--distance",
            "1",
            "--n",
            "3",
        ][..],
        &["conjecture", "--distance", "0", "--n-max", "3"][..],
        &["verify", "--suite", "nope"][..],
    ] {
        let out = hanoi(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?} printed output");
    }
}

#[test]
fn state_cap_exits_one() {
    let out = hanoi(&["solve", "--n", "9", "--method", "bfs", "--max-states", "50"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("state budget exceeded"), "{err}");
}
