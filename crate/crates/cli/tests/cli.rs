use std::sync::Arc;

use pinosp::oracle::{random_element, rng};
use pinosp::{Algebra, ReflectionGroup};
use pinosp_cli::{parse, run, Evaluator, EXIT_OK, EXIT_USAGE, REPORT_SCHEMA};
use serde_json::Value;

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("pinosp").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json_lines(s: &str) -> Vec<Value> {
    s.lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn eval_and_commute() {
    assert_eq!(
        cli(&["eval", "[y1, x1]"]),
        (EXIT_OK, "1 + k1*s1\n".into(), String::new())
    );
    assert_eq!(cli(&["eval", "[y1, x1]", "--kappa", "0"]).1, "1\n");
    assert_eq!(cli(&["commute", "y1", "x1"]).1, "1 + k1*s1\n");
    assert_eq!(
        cli(&["commute", "X", "D", "--kappa", "0"]).1,
        cli(&["eval", "2*H", "--kappa", "0"]).1
    );
    assert_eq!(cli(&["eval", "{e1, e1}"]).1, "0\n");
    let (code, out, _) = cli(&["eval", "[e1, e1]", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"], "2");
    assert_eq!(v["group"], "A1@2");
}

#[test]
fn projector_of_a_clifford_generator() {
    assert_eq!(cli(&["eval", "Pp(e1) + k1*s1*(e1 - e2)"]).1, "0\n");
    assert_eq!(
        cli(&["eval", "Pp(e1) + 2*k1*s1*(e1 - e2)"]).1,
        cli(&["eval", "k1*s1*(e1 - e2)"]).1
    );
    assert_eq!(cli(&["eval", "Pp(e1)", "--kappa", "0"]).1, "0\n");
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, err) = cli(&["eval", "x1 +"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("1:5"), "{err}");
    assert_eq!(cli(&["eval", "q7"]).0, EXIT_USAGE);
    assert_eq!(cli(&["eval", "x1", "--group", "Z9@2"]).0, EXIT_USAGE);
    assert_eq!(cli(&["verify", "--suite", "nope"]).0, EXIT_USAGE);
    assert_eq!(cli(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(cli(&["eval", "x1", "--kappa", "1,2"]).0, EXIT_USAGE);
}

#[test]
fn verify_json_matches_schema_and_text() {
    let (code, out, _) = cli(&["verify", "--suite", "osp-relations", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let reports = json_lines(&out);
    assert_eq!(reports.len(), 6);
    let schema: Value = serde_json::from_str(REPORT_SCHEMA).unwrap();
    let validator = jsonschema::JSONSchema::compile(&schema).unwrap();
    for r in &reports {
        assert!(validator.is_valid(r), "{r}");
        assert_eq!(r["status"], "pass");
    }
    let (_, text, _) = cli(&["verify", "--suite", "osp-relations"]);
    for r in &reports {
        let line = text
            .lines()
            .find(|l| l.starts_with(r["id"].as_str().unwrap()))
            .unwrap();
        assert!(line.contains(r["status"].as_str().unwrap()), "{line}");
    }
    assert!(text.ends_with("6 passed, 0 failed, 0 skipped\n"), "{text}");
}

#[test]
fn reports_are_deterministic() {
    let args = [
        "verify", "--suite", "center", "--group", "A2@3", "--format", "json",
    ];
    let (_, a, _) = cli(&args);
    let (_, b, _) = cli(&[&args[..], &["--jobs", "1"]].concat());
    assert_eq!(a, b);
}

#[test]
fn skipped_cases_do_not_fail() {
    let (code, out, _) = cli(&[
        "verify", "--suite", "squares", "--group", "B2@2", "--kappa", "1,-1/2",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("2 passed, 0 failed, 2 skipped"), "{out}");
}

#[test]
fn crosscheck_passes_and_catches_mutation() {
    let (code, out, _) = cli(&[
        "crosscheck",
        "--samples",
        "4",
        "--max-degree",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["mutation_detected"], true);
}

#[test]
fn custom_group_file() {
    let path = std::env::temp_dir().join(format!("pinosp-b2-{}.json", std::process::id()));
    std::fs::write(
        &path,
        r#"{"name": "B2", "generators": [[[0, 1], [1, 0]], [[1, 0], [0, -1]]]}"#,
    )
    .unwrap();
    let group = format!("custom:{}", path.display());
    let (code, out, _) = cli(&["info", "--group", &group, "--format", "json"]);
    assert_eq!(code, EXIT_OK, "{out}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["order"], 8);
    assert_eq!(v["reflections"].as_array().unwrap().len(), 4);
    let (code, out, _) = cli(&["verify", "--suite", "osp-relations", "--group", &group]);
    assert_eq!(code, EXIT_OK, "{out}");
    let _ = std::fs::remove_file(&path);
    assert_eq!(
        cli(&["info", "--group", "custom:/nonexistent.json"]).0,
        EXIT_USAGE
    );
}

#[test]
fn list_and_info() {
    let (code, out, _) = cli(&["list-suites"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.lines().any(|l| l.starts_with("osp-relations")));
    let (_, out, _) = cli(&["info", "--group", "A2@3"]);
    assert!(out.contains("order 6"), "{out}");
}

#[test]
fn print_parse_round_trip_on_random_elements() {
    for spec in ["A1@2", "A2@3", "B2@2"] {
        let ctx: Arc<Algebra> =
            Algebra::symbolic(ReflectionGroup::build(spec.parse().unwrap()).unwrap());
        let ev = Evaluator::new(&ctx).unwrap();
        let mut r = rng(11);
        for _ in 0..100 {
            let a = random_element(&ctx, &mut r, 3, 4);
            let text = a.to_string();
            let back = ev.eval(&parse(&text).unwrap()).unwrap();
            assert_eq!(back, a, "{spec}: {text}");
        }
    }
}
