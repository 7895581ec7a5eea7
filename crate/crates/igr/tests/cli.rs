use std::io::Write;
use std::process::{Command, Output, Stdio};

fn igr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_igr"))
        .args(args)
        .output()
        .expect("run igr")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn last_line(o: &Output) -> String {
    stdout(o).lines().last().unwrap_or_default().to_string()
}

#[test]
fn census_3_2() {
    let o = igr(&["kp", "census", "3", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("2,4,6  12     12    PASS"), "{s}");
    assert_eq!(last_line(&o), "SUMMARY pass=true checked=1 failed=0");
}

#[test]
fn census_json() {
    let o = igr(&["--format", "json", "kp", "census", "3", "2"]);
    let s = stdout(&o);
    let body = &s[..s.rfind("SUMMARY").unwrap()];
    let v: serde_json::Value = serde_json::from_str(body).unwrap();
    assert_eq!(v["sizes"], serde_json::json!([2, 4, 6]));
    assert_eq!(v["total"], "12");
    assert_eq!(v["pass"], true);
}

#[test]
fn staircase_fixture_table() {
    let o = igr(&[
        "--format",
        "json",
        "staircase",
        "3,2,2,1",
        "--from",
        "-1",
        "--to",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["vset"], serde_json::json!([-2, 0, 1]));
    let z: Vec<i64> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["z"].as_i64().unwrap())
        .collect();
    assert_eq!(z, vec![4, 3, 2, -1, -3, -4, -5]);
    let t = stdout(&igr(&["staircase", "3,2,2,1"]));
    assert!(t.contains("V = {-2,0,1}"), "{t}");
}

#[test]
fn bbw_projective_line() {
    let o = igr(&[
        "--format", "json", "bbw", "gl", "--r", "2", "--s", "1", "--", "-2", "0",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["result"]["dominant"], serde_json::json!([-1, -1]));
    assert_eq!(v["result"]["degree"], 1);
    let o = igr(&[
        "--format", "json", "bbw", "gl", "--r", "2", "--s", "1", "--", "-1", "0",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["result"]["vanishes"], true);
}

#[test]
fn bad_input_exits_2() {
    assert_eq!(igr(&["kp", "census", "3", "9"]).status.code(), Some(2));
    assert_eq!(igr(&["staircase", "3,x"]).status.code(), Some(2));
    assert_eq!(
        igr(&["bbw", "gl", "--r", "3", "--s", "1", "--", "1", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(igr(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn complex_json_roundtrip_through_check() {
    let built = igr(&[
        "--format", "json", "complex", "build", "gsc", "2,-1", "--space", "Gr(2,5)",
    ]);
    assert_eq!(built.status.code(), Some(0));
    let mut child = Command::new(env!("CARGO_BIN_EXE_igr"))
        .args(["complex", "check", "--input", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(&built.stdout)
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(last_line(&o), "SUMMARY pass=true checked=1 failed=0");
}

#[test]
fn broken_complex_exits_1() {
    let input = r#"{"space":"Gr(1,2)","terms":[{"bundle":[{"space":"Gr(1,2)","factors":[[1],[0]]}],"degree":0}],"claimed":null}"#;
    let path = std::env::temp_dir().join(format!("igr-broken-{}.json", std::process::id()));
    std::fs::write(&path, input).unwrap();
    let o = igr(&["complex", "check", "--input", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(last_line(&o), "SUMMARY pass=false checked=1 failed=1");
}

#[test]
fn secondary_zero_case_and_latex() {
    // α_1 = n−k+1 on IGr(2,6): claimed class zero, still exact.
    let o = igr(&["complex", "check", "secondary", "2", "--k", "2", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let l = stdout(&igr(&[
        "--format",
        "latex",
        "complex",
        "build",
        "secondary",
        "1",
        "--k",
        "2",
        "--n",
        "3",
    ]));
    assert!(l.starts_with("\\documentclass{article}") && l.trim_end().ends_with("\\end{document}"));
    assert!(l.is_ascii());
}

#[test]
fn verify_suites() {
    for suite in ["exc", "semi", "dual"] {
        let o = igr(&["kp", "verify", "3", "2", "--suite", suite]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stdout(&o));
        assert!(last_line(&o).starts_with("SUMMARY pass=true"));
    }
}

#[test]
fn sampled_dual_is_deterministic() {
    let args = [
        "--format",
        "json",
        "kp",
        "verify",
        "4",
        "2",
        "--suite",
        "dual",
        "--samples",
        "50",
        "--seed",
        "7",
    ];
    let a = igr(&args);
    let b = igr(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(last_line(&a).contains("checked=50"));
}

#[test]
fn tensor_and_branch() {
    let o = igr(&["--format", "json", "tensor", "gl", "1,0", "1,0"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
    let o = igr(&["--format", "json", "branch", "1,0", "--t", "1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 3);
}

#[test]
fn accept_subset() {
    let o = igr(&["accept", "--only", "1,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(last_line(&o), "SUMMARY pass=true checked=2 failed=0");
}

#[test]
fn census_latex_snapshot() {
    let o = igr(&["--format", "latex", "kp", "census", "3", "2"]);
    let want = r"\documentclass{article}
\usepackage{amsmath,amssymb}
\begin{document}
\[
\text{census on IGr(2,6)}
\]
\[
\begin{array}{llll}
\text{sizes} & \text{total} & \text{rank} & \text{result} \\ \hline
2,4,6 & 12 & 12 & \text{PASS} \\
\end{array}
\]
\end{document}
SUMMARY pass=true checked=1 failed=0
";
    assert_eq!(stdout(&o), want);
}
