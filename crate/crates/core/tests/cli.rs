mod common;

use std::process::Command;

use depiction::cli::run_cli;
use depiction::generators::{gen_correct_diagram, GenConfig, Seed};
use depiction::io::{emit_scene, parse_diagram, parse_verdict, parse_witness};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["depiction"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_cli(&argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn path(name: &str) -> String {
    common::data_path(name).to_str().unwrap().to_string()
}

#[test]
fn check_exit_codes() {
    let (code, out, _) = run(&["check", &path("dilation.json")]);
    assert_eq!(code, 0);
    let (v, _) = parse_verdict(&out).unwrap();
    assert!(v.correct);

    let (code, out, _) = run(&["check", &path("perturbed.json")]);
    assert_eq!(code, 1);
    assert!(out.contains("\"reason\": \"diagonal-not-perspective:A\""));

    let (code, out, _) = run(&["check", &path("translate.json")]);
    assert_eq!(code, 2);
    assert!(out.contains("\"applicable\": false"));
}

#[test]
fn check_writes_witness_reference() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.json");
    let (code, out, _) = run(&[
        "check",
        &path("dilation.json"),
        "--witness",
        w.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let (_, reference) = parse_verdict(&out).unwrap();
    assert_eq!(reference.as_deref(), w.to_str());
    parse_witness(&std::fs::read_to_string(&w).unwrap()).unwrap();
}

#[test]
fn invalid_document_and_missing_file() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        common::data("dilation.json")
            .replacen("\"3\"", "\"1\"", 1)
            .replacen("\"0\"", "\"1\"", 1),
    )
    .unwrap();
    let (code, _, err) = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("kind=invariant"), "{err}");

    let (code, _, err) = run(&["check", dir.path().join("nope.json").to_str().unwrap()]);
    assert_eq!(code, 66);
    assert!(err.contains("kind=file"));
}

#[test]
fn usage_errors() {
    assert_eq!(run(&[]).0, 64);
    assert_eq!(run(&["frobnicate"]).0, 64);
    assert_eq!(run(&["fuzz", "--mode", "sideways"]).0, 64);
    assert_eq!(run(&["lift", &path("dilation.json"), "--c1", "1/0"]).0, 64);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn lift_methods() {
    let (code, out, _) = run(&["lift", &path("dilation.json")]);
    assert_eq!(code, 0);
    assert!(out.contains(
        "\"Pbar\": [\n      \"1/3\",\n      \"4/3\",\n      \"-1/3\",\n      \"1\"\n    ]"
    ));

    let (code, out, _) = run(&["lift", &path("dilation.json"), "--c1", "2", "--c2", "-1/2"]);
    assert_eq!(code, 0);
    parse_witness(&out).unwrap();

    // The dilation's axis is the line at infinity, which the axis route rejects.
    let (code, _, err) = run(&["lift", &path("dilation.json"), "--method", "axis"]);
    assert_eq!(code, 1);
    assert!(err.contains("kind=geometry"));

    let (code, _, _) = run(&["lift", &path("perturbed.json")]);
    assert_eq!(code, 1);
}

#[test]
fn project_round_trips_generated_scene() {
    let dir = tempfile::tempdir().unwrap();
    let (scene, d) = gen_correct_diagram(Seed(5), &GenConfig::default()).unwrap();
    let file = dir.path().join("scene.json");
    std::fs::write(&file, emit_scene(&scene)).unwrap();
    let (code, out, _) = run(&["project", file.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(parse_diagram(&out).unwrap(), d);
}

#[test]
fn axis_and_qset() {
    let (code, out, _) = run(&["axis", &path("dilation.json")]);
    assert_eq!(code, 0);
    assert!(out.contains("\"axis\": [\n    \"0\",\n    \"0\",\n    \"1\"\n  ]"));

    let (code, out, _) = run(&["axis", &path("perturbed.json")]);
    assert_eq!(code, 1);
    assert!(out.contains("\"axis\": null"));

    let (code, out, _) = run(&["qset", &path("dilation.json"), "0:0:1"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"equal\": true"));

    let (code, out, _) = run(&["qset", &path("perturbed.json"), "0:1:-5"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"equal\": false"));

    // y = 1 passes through P1 and Q1.
    let (code, _, _) = run(&["qset", &path("dilation.json"), "0:1:-1"]);
    assert_eq!(code, 1);
}

#[test]
fn fuzz_summaries() {
    let (code, out, _) = run(&["fuzz", "--count", "50", "--seed", "7", "--mode", "correct"]);
    assert_eq!((code, out.as_str()), (0, "50/50 verdicts correct\n"));
    let (code, out, _) = run(&[
        "fuzz",
        "--count",
        "50",
        "--seed",
        "7",
        "--mode",
        "incorrect",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("50/50 "));
    let (code, out, _) = run(&[
        "fuzz",
        "--count",
        "50",
        "--seed",
        "7",
        "--mode",
        "desargues",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("50/50 "));
}

#[test]
fn render_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d.svg");
    let (code, _, _) = run(&[
        "render",
        &path("dilation.json"),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let svg = std::fs::read_to_string(&out).unwrap();
    roxmltree::Document::parse(&svg).unwrap();

    let missing_dir = dir.path().join("no/such/dir/d.svg");
    let (code, _, _) = run(&[
        "render",
        &path("dilation.json"),
        "--out",
        missing_dir.to_str().unwrap(),
    ]);
    assert_eq!(code, 66);
}

#[test]
fn binary_reports_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_depiction");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["check", &path("dilation.json")]), Some(0));
    assert_eq!(status(&["check", &path("perturbed.json")]), Some(1));
    assert_eq!(status(&["check", &path("translate.json")]), Some(2));
    assert_eq!(status(&["check"]), Some(64));
    assert_eq!(status(&["check", "/nonexistent/x.json"]), Some(66));
}
