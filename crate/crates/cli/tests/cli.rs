use std::process::{Command, Output};

fn qtensor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtensor")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

#[test]
fn dfun_prints_pretty_element() {
    let o = qtensor(&["dfun", "--j", "2", "--row", "2", "--col", "0", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "q^(1/2)*sqrt(q+q^-1)*X*U");
}

#[test]
fn dfun_accepts_negative_labels() {
    let o = qtensor(&["dfun", "--j", "1", "--row", "-1", "--col", "1", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "V");
}

#[test]
fn cg_json_without_q_has_null_numeric() {
    let o = qtensor(&["cg", "--j1", "1", "--j2", "1", "--j", "2", "--m1", "1", "--m2", "1", "--m", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], "1");
    assert!(v["numeric_at"].is_null());
}

#[test]
fn cg_numeric_value_is_normalized() {
    // |C(1/2,1/2;1/2,-1/2|0,0)|^2 + |C(1/2,-1/2;1/2,1/2|0,0)|^2 = 1 at any q.
    let get = |m1: &str, m2: &str| {
        let o = qtensor(&[
            "cg", "--j1", "1", "--j2", "1", "--j", "0", "--m1", m1, "--m2", m2, "--m", "0", "--q-num", "3/2", "--format", "json",
        ]);
        assert_eq!(o.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        v["numeric_at"]["value"].as_str().unwrap().parse::<f64>().unwrap()
    };
    let (a, b) = (get("1", "-1"), get("-1", "1"));
    assert!((a * a + b * b - 1.0).abs() < 1e-12);
    assert!(a * b < 0.0);
}

#[test]
fn cg_table_as_csv() {
    let o = qtensor(&["cg", "--j1", "1", "--j2", "1", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "j1,m1,j2,m2,j,m,value");
    assert_eq!(lines.len(), 7);
}

#[test]
fn partial_cg_labels_are_a_usage_error() {
    let o = qtensor(&["cg", "--j1", "1", "--j2", "1", "--j", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn haar_of_uv() {
    let o = qtensor(&["haar", "--expr", "U*V", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "-1/(q+q^-1)");
}

#[test]
fn haar_of_constant_is_itself() {
    let o = qtensor(&["haar", "--expr", "3", "--format", "text"]);
    assert_eq!(stdout(&o).trim(), "3");
}

#[test]
fn eval_prints_digits() {
    let o = qtensor(&["eval", "--expr", "q+q^-1", "--q-num", "2", "--digits", "5", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim().starts_with("2.5"));
}

#[test]
fn verify_hopf_passes() {
    let o = qtensor(&["verify", "hopf", "--jmax", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["q_symbolic"], true);
}

#[test]
fn verify_text_summary() {
    let o = qtensor(&["verify", "hopf", "--jmax", "2", "--format", "text"]);
    assert!(stdout(&o).trim_end().ends_with("hopf: pass"));
}

#[test]
fn checks_are_sorted_by_name() {
    let o = qtensor(&["verify", "hopf", "--jmax", "2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

#[test]
fn seeded_runs_are_identical() {
    let a = qtensor(&["verify", "classical", "--seed", "11"]);
    let b = qtensor(&["verify", "classical", "--seed", "11"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn parity_invalid_cg_labels_are_a_domain_error() {
    let o = qtensor(&["cg", "--j1", "1", "--j2", "1", "--j", "0", "--m1", "0", "--m2", "0", "--m", "0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("parity"));
}

#[test]
fn verify_json_schema() {
    let o = qtensor(&["verify", "classical", "--group", "z2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["suite"], "classical");
    assert!(v["checks"].as_array().is_some_and(|c| !c.is_empty()));
}

#[test]
fn wrong_kind_fails_with_one() {
    let o = qtensor(&["verify", "boson", "--variant", "a37", "--kind", "twisted", "--jmax", "2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn own_kind_passes() {
    let o = qtensor(&["verify", "boson", "--variant", "a39", "--jmax", "2"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn single_triple_ito() {
    let o = qtensor(&["verify", "ito", "--p", "1", "--q", "1", "--r", "2", "--kind", "twisted"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn wigner_eckart_json_includes_reduced_elements() {
    let o = qtensor(&["verify", "wigner-eckart", "--p", "2", "--q", "2", "--r", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["reduced_elements"].as_array().map(Vec::len), Some(1));
    assert_eq!(v["factorization"], "pass");
}

#[test]
fn forbidden_triple_reports_failure() {
    let o = qtensor(&["verify", "wigner-eckart", "--p", "1", "--q", "1", "--r", "4"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn group_from_file() {
    let dir = std::env::temp_dir().join(format!("qtensor-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("z3.json");
    std::fs::write(&path, r#"{"order":3,"mul":[[0,1,2],[1,2,0],[2,0,1]],"names":["e","a","b"]}"#).unwrap();
    let o = qtensor(&["verify", "classical", "--group", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn invalid_group_file_is_domain_error() {
    let o = qtensor(&["verify", "classical", "--group", "/definitely/not/here.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn unknown_flag_exits_two() {
    let o = qtensor(&["--bogus"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"));
}

#[test]
fn negative_spin_is_domain_error() {
    let o = qtensor(&["dfun", "--j", "-1", "--row", "0", "--col", "0"]);
    assert_eq!(o.status.code(), Some(2));
}
