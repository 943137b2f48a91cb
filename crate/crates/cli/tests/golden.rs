use std::process::{Command, Output};

fn lppkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lppkit")).args(args).env_remove("LPPKIT_GUARD").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = lppkit(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn bound_prints_rectangle_and_value() {
    let out = ok(&["bound", "--A", "3,4,11", "--d", "4", "--h", "10"]);
    assert!(out.trim_end().ends_with("\n10"), "{out}");
    let expected = "\
t         0  1  2  3   4   5
(1,1,11)  1 [1][1] 1   1   1
(1,4,11)  1  2  3 [4] [4]  4
(3,4,11)  1  3  6  9  11  12
expansion: 10 = 4 (row 2, col 4) + 4 (row 2, col 3) + 1 (row 1, col 2) + 1 (row 1, col 1)
H(5) <= 4 + 4 + 1 + 1 = 10
10
";
    assert_eq!(out, expected);
}

#[test]
fn bound_for_degree_twelve() {
    let out = ok(&["bound", "--A", "3,4,11", "--d", "12", "--h", "7"]);
    assert_eq!(out.lines().last(), Some("4"));
}

#[test]
fn vec_from_hf() {
    let out = ok(&["vec", "from-hf", "--A", "4,4,6", "--hf", "1 3 6 10 13 10 5 3"]);
    assert_eq!(out, "[[1,2],[1,3,4],[2,3,6,6],[5,6,6,6]]\n");
}

#[test]
fn vec_dual() {
    assert_eq!(ok(&["vec", "dual", "--A", "5,7", "--vec", "[1,3,4,7,7]"]), "[3,4,6]\n");
}

#[test]
fn vec_round_trip_through_hf_and_ideal() {
    let hf = ok(&["vec", "to-hf", "--A", "4,4,6", "--vec", "[[1,2],[1,3,4],[2,3,6,6],[5,6,6,6]]"]);
    assert_eq!(hf, "1 3 6 10 13 10 5 3 0\n");
    let ideal = ok(&["vec", "to-ideal", "--A", "5,7", "--vec", "[3,4,6]"]);
    let residual = ok(&["colon", "--A", "5,7", "--ideal", "x^5, x^4y, x^3y^3, x^2y^4, y^7"]);
    assert_eq!(ideal, residual);
    let hf = ok(&["hf", "--ideal", ideal.trim()]);
    assert_eq!(hf, ok(&["vec", "to-hf", "--A", "5,7", "--vec", "[3,4,6]"]));
}

#[test]
fn vec_validate_and_stats() {
    assert_eq!(ok(&["vec", "validate", "--A", "5,7", "--vec", "[1,3,4,7,7]"]), "valid\n");
    let bad = lppkit(&["vec", "validate", "--A", "5,7", "--vec", "[1,3,4,8]"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).starts_with("invalid:"));
    assert_eq!(ok(&["vec", "stats", "--A", "5,7", "--vec", "[3,4,6]"]), "length 3\nsigma 6\nalpha 3\nci false\n");
}

#[test]
fn staircase_matches_figure() {
    let out = ok(&["staircase", "--A", "5,7", "--vec", "[1,3,4,7,7]"]);
    let filled: Vec<usize> = out.lines().map(|l| l.matches('•').count()).collect();
    assert_eq!(filled, vec![1, 3, 4, 7, 7]);
    assert!(out.lines().all(|l| l.split(' ').count() == 7));
}

#[test]
fn betti_and_socle() {
    let out = ok(&["betti", "--ideal", "x^2, xy, y^2"]);
    assert_eq!(out, "       0 1 2\ntotal: 1 3 2\n    0: 1 . .\n    1: . 3 2\n");
    assert_eq!(ok(&["socle", "--ideal", "x^2, xy, y^2"]), "degree 1: 2\n");
    let json = ok(&["betti", "--ideal", "x^2, xy, y^2", "--char", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["n"], 2);
}

#[test]
fn validseq_reports_reason() {
    assert_eq!(ok(&["validseq", "--A", "3,4,11", "--hf", "1 3 6 9 10"]), "valid\n");
    let o = lppkit(&["validseq", "--A", "3,3", "--hf", "1 2 4"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn json_outputs_parse() {
    for args in [
        &["hf", "--ideal", "x^3,y^4,z^11", "--json"][..],
        &["bound", "--A", "3,4,11", "--d", "4", "--h", "10", "--json"],
        &["vec", "stats", "--A", "5,7", "--vec", "[3,4,6]", "--json"],
        &["colon", "--ideal", "x^2,y^3", "--by", "x", "--json"],
        &["staircase", "--A", "5,7", "--vec", "[1,3,4,7,7]", "--json"],
    ] {
        let out = ok(args);
        serde_json::from_str::<serde_json::Value>(&out).unwrap_or_else(|e| panic!("{args:?}: {e}"));
    }
}

#[test]
fn parse_errors_name_the_token() {
    for (args, token) in [
        (&["bound", "--A", "3,4,1x", "--d", "4", "--h", "10"][..], "`1x`"),
        (&["hf", "--ideal", "x^2, w3"], "`w3`"),
        (&["vec", "dual", "--A", "5,7", "--vec", "[1,3,q]"], "q"),
        (&["validseq", "--A", "3,3", "--hf", "1 2 two"], "`two`"),
        (&["betti", "--ideal", "x^2", "--char", "4"], "4"),
        (&["frobnicate"], "frobnicate"),
    ] {
        let o = lppkit(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        let err = String::from_utf8_lossy(&o.stderr);
        assert!(err.contains(token), "{args:?}: {err}");
    }
}

#[test]
fn checks_report_and_exit() {
    let out = ok(&["check", "growth", "--A", "2,3,3"]);
    assert!(out.lines().next().unwrap().starts_with("check"));
    assert!(out.contains("instances, 0 not passing"));
    let json = ok(&["check", "lpp", "--A", "2,2", "--hf", "1 2 1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(json.trim()).unwrap();
    assert_eq!(v["verdict"], "pass");
    for kind in ["residual", "lexseg", "socle-equiv"] {
        ok(&["check", kind, "--A", "2,2,3"]);
    }
}

#[test]
fn guard_exceeded_exits_three() {
    let o = lppkit(&["check", "lpp", "--A", "3,3,3", "--hf", "1 3 6 6 3 1", "--max-count", "1"]);
    assert_eq!(o.status.code(), Some(3), "{}", stdout(&o));
    let o = Command::new(env!("CARGO_BIN_EXE_lppkit"))
        .args(["check", "growth", "--A", "3,3,3", "--hf", "1 3 6 6 3 1"])
        .env("LPPKIT_GUARD", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn ideal_from_file_and_stdin() {
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("ideal.txt");
    std::fs::write(&path, "x^2, xy, y^2\n").unwrap();
    assert_eq!(ok(&["hf", "--ideal", path.to_str().unwrap()]), "1 2 0\n");
    let mut child = Command::new(env!("CARGO_BIN_EXE_lppkit"))
        .args(["hf", "--ideal", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    use std::io::Write;
    child.stdin.take().unwrap().write_all(br#"{"n":2,"gens":[[1,0],[0,3]]}"#).unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o), "1 1 1 0\n");
}
