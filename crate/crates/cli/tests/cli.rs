use std::process::{Command, Output};

fn whipple(args: &[&str]) -> Output {
    whipple_env(args, None)
}

fn whipple_env(args: &[&str], opts: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_whipple"));
    cmd.args(args).env_remove("WHIPPLE_OPTS");
    if let Some(o) = opts {
        cmd.env("WHIPPLE_OPTS", o);
    }
    cmd.output().expect("run whipple")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_both_sides() {
    let o = whipple(&["eval", "--identity", "COR_C", "--n", "1", "--side", "both"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("lhs=-1/4") && s.contains("rhs=-1/4"), "{s}");
}

#[test]
fn eval_single_side_and_negative_x() {
    let o = whipple(&["eval", "--identity", "THM_H2_T0", "--n", "1", "--x", "1/2", "--side", "rhs"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("rhs=-16/27") && !s.contains("lhs="), "{s}");

    let o = whipple(&["eval", "--identity", "DEGEN_T0", "--n", "2", "--x", "-5/2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rows[0]["lhs"], rows[0]["rhs"]);
    assert_eq!(rows[0]["x"], "-5/2");
}

#[test]
fn eval_aux() {
    use whipple::closed_forms::{aux_eval, Aux};
    let o = whipple(&["eval", "--aux", "U", "--n", "1", "--x", "1/2"]);
    assert_eq!(o.status.code(), Some(0));
    let want = aux_eval(Aux::U, 1, &whipple::Rational::frac(1, 2)).unwrap();
    assert!(stdout(&o).contains(&format!("rhs={want}")), "{}", stdout(&o));

    let o = whipple(&["eval", "--aux", "b", "--n", "3", "--x", "5", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let want = aux_eval(Aux::B, 3, &whipple::Rational::from(5)).unwrap();
    assert!(stdout(&o).lines().nth(1).unwrap().starts_with(&format!("B,3,5,,,,{want},")));

    assert_eq!(whipple(&["eval", "--aux", "A", "--n", "2", "--x", "1/2"]).status.code(), Some(2));
}

#[test]
fn singular_point_is_a_usage_error() {
    let o = whipple(&["eval", "--identity", "THM_H2_T0", "--n", "3", "--x", "-2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("singular"));
}

#[test]
fn list_has_36_identities() {
    let o = whipple(&["list"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert_eq!(s.lines().count(), 36);
    assert!(s.lines().next().unwrap().starts_with("LEMMA_T0"));
    assert!(s.lines().any(|l| l.starts_with("COR_Y")));
}

#[test]
fn unknown_identity_exits_2() {
    let o = whipple(&["verify", "--identity", "COR_Q"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("COR_Q"));
}

#[test]
fn missing_selector_exits_2() {
    assert_eq!(whipple(&["verify"]).status.code(), Some(2));
    assert_eq!(whipple(&["eval", "--n", "1"]).status.code(), Some(2));
    assert_eq!(whipple(&["verify", "--all", "--jobs", "0"]).status.code(), Some(2));
}

#[test]
fn verify_all_lists_every_identity() {
    let o = whipple(&["verify", "--all", "--n-max", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["summary"]["per_identity"].as_array().unwrap().len(), 36);
    assert_eq!(r["summary"]["failed"], 0);
    assert!(r["failures"].as_array().unwrap().is_empty());
}

#[test]
fn json_is_independent_of_jobs() {
    let run = |jobs: &str| {
        let o = whipple(&["verify", "--all", "--n-max", "6", "--format", "json", "--jobs", jobs]);
        assert_eq!(o.status.code(), Some(0));
        o.stdout
    };
    assert_eq!(run("1"), run("8"));
}

#[test]
fn json_round_trips() {
    let o = whipple(&["verify", "--identity", "COR_B", "--identity", "LEMMA_T2", "--n-max", "3", "--format", "json"]);
    let text = stdout(&o);
    let report = whipple::report::from_json(&text).unwrap();
    assert_eq!(whipple::report::to_json(&report).unwrap(), text);
}

#[test]
fn csv_output_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cases.csv");
    let o = whipple(&[
        "verify", "--identity", "COR_A", "--n-max", "3", "--format", "csv", "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let csv = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "identity,n,p,x,y,lhs,rhs,equal");
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[3], "COR_A,2,0,,,3/2,3/2,true");
}

#[test]
fn x_grid_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("x.txt");
    std::fs::write(&path, "# two points\n1/3, -7/2\n").unwrap();
    let o = whipple(&[
        "verify", "--identity", "THM_HSQ_T1", "--n-max", "2", "--format", "csv", "--x-grid",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1 + 3 * 2);

    std::fs::write(&path, "1/0\n").unwrap();
    let o = whipple(&["verify", "--all", "--x-grid", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let o = whipple(&["verify", "--all", "--x-grid", "no-such-preset"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn env_options_are_overridden_by_flags() {
    let args = ["verify", "--identity", "COR_A", "--format", "csv"];
    let from_env = whipple_env(&args, Some("--n-max 2"));
    assert_eq!(stdout(&from_env).lines().count(), 1 + 3);
    let flag_wins = whipple_env(&[&args[..], &["--n-max", "4"]].concat(), Some("--n-max 2"));
    assert_eq!(stdout(&flag_wins).lines().count(), 1 + 5);
    let bad = whipple_env(&["list"], Some("--bogus"));
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn table_marks_singular_rows() {
    let o = whipple(&["table", "--identity", "THM_H2_T0", "--x", "-2", "--n-max", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert_eq!(s.lines().count(), 4);
    assert!(s.lines().nth(1).unwrap().contains("equal"));
    assert!(s.lines().nth(2).unwrap().contains("skipped"));
}

#[test]
fn selftest_passes() {
    let o = whipple(&["selftest", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let t: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(t["passed"], true);
    assert_eq!(t["spot_values"].as_array().unwrap().len(), 3);
    assert!(t["mutations"].as_array().unwrap().iter().all(|m| !m["minimal"].is_null()));
}
