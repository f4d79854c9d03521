use std::process::{Command, Output};

fn gammacl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gammacl")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn simplify_formats() {
    let out = gammacl(&["simplify", "g(0)*g(0,1)"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "g(1)\n");

    let out = gammacl(&["simplify", "--format", "latex", "g(1,2,3)*g5"]);
    assert_eq!(stdout(&out), "-\\gamma^{0}\n");

    let out = gammacl(&["simplify", "--format", "json", "g(0,1) - 1"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["scalar"], "-1");
    assert_eq!(value["bivector"]["0,1"], "1");
}

#[test]
fn simplify_leading_minus() {
    let out = gammacl(&["simplify", "-g(2)*g(2)"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn bad_input_exits_2() {
    for input in ["g(4)", "g(0,1,2,3)", "g(0", "foo(1)", "1/0", ""] {
        let out = gammacl(&["simplify", input]);
        assert_eq!(out.status.code(), Some(2), "{input:?}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("offset"), "{input:?}");
    }
    assert_eq!(gammacl(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(gammacl(&["verify", "--identity", "nope"]).status.code(), Some(2));
}

#[test]
fn verify_single_identity() {
    let out = gammacl(&["verify", "--identity", "vector-vector", "--rep", "chiral"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("PASS vector-vector [chiral] 16 cases\n"), "{text}");
    assert!(text.ends_with("1 identities, 16 cases, 0 failed\n"), "{text}");
}

#[test]
fn verify_writes_json() {
    let path = std::env::temp_dir().join(format!("gammacl-report-{}.json", std::process::id()));
    let out = gammacl(&[
        "verify",
        "--identity",
        "pseudoscalar-square",
        "--identity",
        "epsilon-determinant",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let reports: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    let reports = reports.as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0]["identity"], "pseudoscalar-square");
    assert_eq!(reports[0]["representation"], "standard");
    assert_eq!(reports[0]["cases_checked"], 1);
    assert_eq!(reports[1]["cases_checked"], 65536);
    assert_eq!(reports[1]["passed"], true);
    assert_eq!(reports[1]["counterexamples"].as_array().unwrap().len(), 0);
}

#[test]
fn table_blocks() {
    let out = gammacl(&["table"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 256);
    assert!(text.contains("g(0) * g(1) = g(0,1)\n"));
    assert!(text.contains("g5 * g5 = -1\n"));

    let out = gammacl(&["table", "--left-grade", "1", "--right-grade", "4"]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 4);
    assert!(text.contains("g(0) * g5 = g(1,2,3)\n"), "{text}");

    let out = gammacl(&["table", "--left-grade", "2", "--right-grade", "2", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 36);
    assert_eq!(rows[0]["left"], "g(0,1)");
    assert_eq!(rows[0]["grades"], serde_json::json!([2, 2]));
    assert_eq!(rows[0]["product"]["scalar"], "1");

    assert_eq!(gammacl(&["table", "--left-grade", "5"]).status.code(), Some(2));
}
