use std::process::{Command, Output};

fn supersym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_supersym"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_member_exits_zero() {
    let o = supersym(&[
        "check", "--mode", "laurent", "--m", "1", "--n", "1", "--expr", "x1 - y1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "member\n");
    assert!(o.stderr.is_empty());
}

#[test]
fn check_non_member_exits_one() {
    let o = supersym(&[
        "check", "--mode", "laurent", "--m", "1", "--n", "1", "--expr", "x1 + y1", "--json",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["member"], false);
    assert_eq!(v["failing_root"], serde_json::json!([1, 1]));
}

#[test]
fn parse_error_exits_two_on_stderr() {
    let o = supersym(&["check", "--m", "1", "--n", "1", "--expr", "x1^-1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("negative exponent"));
}

#[test]
fn closure_of_root_vector_point() {
    // (1, 0, -1) is the root vector eps1 - delta1, so its closure is the two lines
    // through the origin along eps1 - delta1 and eps2 - delta1.
    let o = supersym(&[
        "closure",
        "--m",
        "2",
        "--n",
        "1",
        "--points",
        r#"[{"coords":["1","0","-1"]}]"#,
        "--no-weyl",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        concat!(
            r#"{"signature":{"m":2,"n":1},"subspaces":["#,
            r#"{"base":["0","0","0"],"dirs":[["0","1","-1"]]},"#,
            r#"{"base":["0","0","0"],"dirs":[["1","0","-1"]]}]}"#,
            "\n"
        )
    );
}

#[test]
fn points_from_file() {
    let dir = std::env::temp_dir().join(format!("supersym-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("points.json");
    std::fs::write(&path, r#"[{"coords":["1","-1"]}]"#).unwrap();
    let arg = format!("@{}", path.display());
    let o = supersym(&["orbit", "--m", "1", "--n", "1", "--points", &arg]);
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 subspace(s) in (1|1)\n  (0, 0) + span{(1, -1)}\n");
}

#[test]
fn roots_lists_two() {
    let o = supersym(&["roots", "--m", "1", "--n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "2 isotropic root(s) in (1|1)\n  eps1 - delta1  (1, -1)\n  -(eps1 - delta1)  (-1, 1)\n"
    );
}

#[test]
fn non_convergence_exits_three() {
    let o = supersym(&[
        "orbit",
        "--m",
        "2",
        "--n",
        "2",
        "--points",
        r#"{"coords":["0","0","0","0"]}"#,
        "--max-subspaces",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn basis_and_powersum() {
    let o = supersym(&["basis", "--m", "1", "--n", "1", "--degree", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("degree 2, dimension 2\n"));
    let o = supersym(&["powersum", "--m", "2", "--n", "1", "--r", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["poly"], "x1^2 + x2^2 - y1^2");
}
