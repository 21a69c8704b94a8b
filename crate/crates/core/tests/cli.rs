mod common;

use std::fs;

use common::{bin, corpus};

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn bundled_corpus_answers() {
    let path = corpus("problems.speck");
    let (code, out, err) = run(&["solve", "--check", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let answers: Vec<&str> = out
        .lines()
        .filter(|l| !l.starts_with(' '))
        .map(|l| l.rsplit(": ").next().unwrap())
        .collect();
    assert_eq!(answers, ["12", "80", "30", "3", "2", "2", "4", "13"]);
    assert_eq!(out.matches("(agree)").count(), 8);
}

#[test]
fn empty_file_is_fine() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(&dir, "empty.speck", "");
    assert_eq!(run(&["solve", &p]), (0, String::new(), String::new()));
    assert_eq!(run(&["solve", "--format", "json", &p]).1, "[]\n");
}

#[test]
fn json_golden() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(
        &dir,
        "w.speck",
        "puzzle weighing \"coins\" { objects = 13 }\npuzzle weighing { objects = 1 }\n",
    );
    let (code, out, _) = run(&["solve", "--check", "--format", "json", &p]);
    assert_eq!(code, 0);
    let expected = r#"[
  {
    "label": "coins",
    "kind": "weighing",
    "formula_answer": "3",
    "oracle_answer": "3",
    "agreement": true,
    "explanation": []
  },
  {
    "label": null,
    "kind": "weighing",
    "formula_answer": "0",
    "oracle_answer": "0",
    "agreement": true,
    "explanation": []
  }
]
"#;
    assert_eq!(out, expected);

    // without --check the verification fields are absent, answers unchanged
    let (_, plain, _) = run(&["solve", "--format", "json", &p]);
    let v: serde_json::Value = serde_json::from_str(&plain).unwrap();
    assert!(v[0].get("agreement").is_none());
    assert_eq!(v[0]["formula_answer"], "3");
}

#[test]
fn json_is_byte_stable() {
    let path = corpus("problems.speck");
    let args = [
        "solve",
        "--check",
        "--explain",
        "--format",
        "json",
        path.to_str().unwrap(),
    ];
    let first = run(&args).1;
    for _ in 0..3 {
        assert_eq!(run(&args).1, first);
    }
    assert!(!first.contains('\r'));
}

#[test]
fn explain_mode_shows_the_equation() {
    let path = corpus("problems.speck");
    let (_, out, _) = run(&["solve", "--explain", path.to_str().unwrap()]);
    assert!(out.contains("| 6/(6*6) = 100/(50*x)"));
    assert!(out.contains("| 3^2 < 13 <= 3^3"));
    assert!(out.contains("| [4(4-1)]+1 = 13"));
}

#[test]
fn parse_errors_exit_one_with_locations() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(&dir, "bad.speck", "puzzle weighing { objects = -3 }\n");
    let (code, out, err) = run(&["solve", &p]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert_eq!(
        err,
        format!("{p}:1:29: negative count: values must not be negative\n")
    );
}

#[test]
fn missing_file_exits_one() {
    let (code, _, err) = run(&["solve", "/no/such/file.speck"]);
    assert_eq!(code, 1);
    assert!(err.contains("/no/such/file.speck"));
}

#[test]
fn disagreement_exits_two() {
    let path = corpus("classics.speck");
    let (code, out, _) = run(&["solve", "--check", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(out.contains("DISAGREE"));
    // the same file without --check reports answers only
    let (code, _, _) = run(&["solve", path.to_str().unwrap()]);
    assert_eq!(code, 0);
}

#[test]
fn ceil_subjects_flag() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(
        &dir,
        "r.speck",
        "puzzle rate { work = 40; subjects = 3; time = 120 min; find subjects where work = 100, time = 31 min }",
    );
    let exact = run(&["solve", &p]).1;
    assert!(exact.ends_with(": 900/31\n"), "{exact}");
    let ceiled = run(&["solve", "--ceil-subjects", &p]).1;
    assert!(ceiled.ends_with(": 30\n"), "{ceiled}");
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("report.json");
    let path = corpus("problems.speck");
    let (code, out, _) = run(&[
        "solve",
        "--format",
        "json",
        "--out",
        target.to_str().unwrap(),
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(target).unwrap()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 8);
}

#[test]
fn sweeps() {
    let (code, out, _) = run(&["sweep", "weighing", "--max", "6561"]);
    assert_eq!(code, 0);
    assert_eq!(out, "weighing: 6560 compared, 6560 matches, 0 mismatches\n");
    assert_eq!(
        run(&["sweep", "weighing", "--max", "1"]).1,
        "weighing: 0 compared, 0 matches, 0 mismatches\n"
    );
    let (code, out, _) = run(&["sweep", "pigeonhole"]);
    assert_eq!(code, 0);
    assert!(out.contains(" 0 mismatches"));
    assert_eq!(run(&["sweep", "weighing", "--max", "6562"]).0, 1);
    assert_eq!(run(&["sweep", "pigeonhole", "--max-count", "7"]).0, 1);
}

#[test]
fn transfer_survey_report() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("survey.csv");
    let (code, out, _) = run(&["sweep", "transfer", "--out", target.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("transfer: "));
    let report = fs::read_to_string(&target).unwrap();
    assert!(report.starts_with("instance,enumerated,formula,match\n"));
    assert_eq!(run(&["sweep", "transfer"]).1, report);
}

#[test]
fn thread_count_env() {
    let out = bin()
        .args(["sweep", "weighing", "--max", "50"])
        .env("RIDDLE_FORGE_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = bin()
        .args(["sweep", "weighing"])
        .env("RIDDLE_FORGE_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["frobnicate"]).0, 1);
    assert_eq!(run(&["solve"]).0, 1);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn strategy_and_fmt() {
    let (code, out, _) = run(&["strategy", "3"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "weigh {0} vs {1}\n  left heavy: object 0\n  right heavy: object 1\n  balance: object 2\n"
    );

    let dir = tempfile::tempdir().unwrap();
    let p = write(
        &dir,
        "messy.speck",
        "# note\npuzzle   weighing {\n objects = 13\n}\n",
    );
    assert_eq!(run(&["fmt", &p]).0, 0);
    assert_eq!(
        fs::read_to_string(&p).unwrap(),
        "puzzle weighing { objects = 13 }\n"
    );
}
