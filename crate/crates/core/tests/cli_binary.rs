use std::process::{Command, Output};

fn girthforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_girthforge")).args(args).env_remove("GIRTHFORGE_SEED").output().unwrap()
}

fn write(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write(&dir, "c4.edges", "0 1\n1 2\n2 3\n3 0\n");
    let c5 = write(&dir, "c5.edges", "0 1\n1 2\n2 3\n3 4\n4 0\n");

    assert_eq!(girthforge(&["verify", "--in", &c5, "--family", "even:4"]).status.code(), Some(0));
    assert_eq!(girthforge(&["verify", "--in", &c4, "--family", "even:4"]).status.code(), Some(2));
    assert_eq!(girthforge(&["verify", "--in", &c4, "--family", "odd:4"]).status.code(), Some(1));
    assert_eq!(girthforge(&["extract", "edges", "--in", &c4, "--r", "1"]).status.code(), Some(1));
    assert_eq!(girthforge(&["bogus"]).status.code(), Some(1));
}

#[test]
fn reports_go_to_stdout_and_diagnostics_to_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write(&dir, "c4.edges", "# square\n0 1\n1 2\n2 3\n3 0\n");
    let out = girthforge(&["extract", "edges", "--in", &c4, "--trials", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["output"]["edges"], 3);
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("kept 3 of 4 edges"));

    let bad = write(&dir, "bad.edges", "0 1\n1 1\n");
    let out = girthforge(&["extract", "edges", "--in", &bad]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}
