//! End-to-end tests of the binary: every exit code path that valid and
//! invalid inputs can reach, output formats, and the file-producing
//! subcommands. The disagreement code (4) cannot be reached from valid
//! input — that would contradict the formula under test — and is
//! covered by a unit test of the report-to-exit mapping.

use std::io::Write;
use std::process::{Command, Output};

fn repo_root() -> &'static str {
    concat!(env!("CARGO_MANIFEST_DIR"), "/../..")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hocolim"))
        .args(args)
        .current_dir(repo_root())
        .output()
        .expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hocolim"))
        .args(args)
        .current_dir(repo_root())
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::piped())
        .spawn()
        .expect("binary starts");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary finishes")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn euler_reports_counts_and_betti() {
    let out = run(&["euler", "corpus/bd3.sset", "--sset", "K"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    assert!(text.contains("chi = 2"));
    assert!(text.contains("betti = [1, 0, 1]"));
    assert!(out.stderr.is_empty());
}

#[test]
fn mobius_values_on_the_span() {
    let out = run(&["mobius", "corpus/span.sset", "--sset", "Nspan"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    assert!(text.contains("mu(a) = -1"));
    assert!(text.contains("mu(b) = 1"));
    assert!(text.contains("mu(c) = 1"));
}

#[test]
fn mobius_class_aggregation() {
    let out = run(&[
        "mobius",
        "corpus/bd3.sset",
        "--sset",
        "K",
        "--classes",
        "components",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).contains("mu[{v0, v1, v2, v3}] = 2"));
}

#[test]
fn hocolim_chi_with_weights() {
    let out = run(&[
        "hocolim-chi",
        "corpus/span.sset",
        "--sset",
        "Nspan",
        "--weights",
        "W",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_str(&out), "chi = [4]\n");

    let out = run(&[
        "hocolim-chi",
        "corpus/span.sset",
        "--sset",
        "Nspan",
        "--weights",
        "Wsym",
    ]);
    assert_eq!(stdout_str(&out), "chi = [-1, 1, 1]\n");
}

#[test]
fn json_output_is_valid_and_stringifies_integers() {
    let out = run(&[
        "euler",
        "corpus/bd3.sset",
        "--sset",
        "K",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid json");
    assert_eq!(v["command"], "euler");
    assert_eq!(v["result"]["chi"], "2");
    assert_eq!(v["result"]["betti"][0], "1");
    assert_eq!(v["inputs"]["sset"], "K");
}

#[test]
fn parse_errors_exit_2_with_stderr_only() {
    let out = run_stdin(&["validate", "-"], "sset K { v; 0 }");
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("parse error"));
    assert!(err.contains("1:11"), "position in: {}", err);
}

#[test]
fn semantic_errors_exit_3() {
    // missing faces
    let out = run_stdin(&["validate", "-"], "sset K { v: 0 e: 1 }");
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout_str(&out).contains("violation"));

    // unknown entity name
    let out = run(&["euler", "corpus/bd3.sset", "--sset", "Nope"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());

    // broken simplicial identity
    let corrupted = "\
sset K {
  v0: 0
  v1: 0
  v2: 0
  e01: 1 faces = v1, v0
  e02: 1 faces = v2, v0
  e12: 1 faces = v2, v1
  t: 2 faces = e02, e12, e01
}
";
    let out = run_stdin(&["validate", "-"], corrupted);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_5() {
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(5));
    let out = run(&["euler"]);
    assert_eq!(out.status.code(), Some(5));
    let out = run(&["euler", "corpus/nope.sset", "--sset", "K"]);
    assert_eq!(out.status.code(), Some(5), "unreadable file is a usage error");
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn oracle_batches_exit_0_on_agreement() {
    let out = run(&[
        "oracle",
        "corpus/span.sset",
        "--kind",
        "grothendieck",
        "--seed",
        "1",
        "--count",
        "25",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).contains("25 of 25 instances agree"));

    let out = run(&[
        "oracle",
        "corpus/pushout_sphere.sset",
        "--kind",
        "pushout",
        "--map",
        "f",
        "--map-g",
        "g",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    assert!(text.contains("formula = 2, construction = 2, agree"), "{}", text);

    let out = run(&[
        "oracle",
        "corpus/torus.sset",
        "--kind",
        "bundle",
        "--fiber",
        "T",
        "--base",
        "T",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).contains("formula = 0, construction = 0, agree"));

    let out = run(&[
        "oracle", "corpus/torus.sset", "--kind", "bundle", "--seed", "3", "--count", "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).contains("4 of 4 instances agree"));
}

#[test]
fn pushout_command_builds_the_sphere() {
    let out = run(&[
        "pushout",
        "corpus/pushout_sphere.sset",
        "--map",
        "f",
        "--map-g",
        "g",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["counts"][0], "4");
    assert_eq!(v["result"]["counts"][1], "9");
    assert_eq!(v["result"]["counts"][2], "7");
    // the produced document must itself validate
    let doc = v["result"]["document"].as_str().unwrap();
    let out = run_stdin(&["validate", "-"], doc);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn nerve_and_grothendieck_produce_valid_documents() {
    let dir = std::env::temp_dir().join("hocolim_cli_test");
    std::fs::create_dir_all(&dir).unwrap();

    let nerve_path = dir.join("nerve.sset");
    let out = run(&[
        "nerve",
        "corpus/elaborate.sset",
        "--category",
        "I",
        "-o",
        nerve_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&nerve_path).unwrap();
    let out = run_stdin(&["euler", "-", "--sset", "nerve"], &text);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_str(&out).contains("counts = [4, 5, 2]"));

    // a poset name is accepted where a category is expected
    let out = run(&["nerve", "corpus/collapse.sset", "--category", "I2"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_str(&out);
    let check = run_stdin(&["euler", "-", "--sset", "nerve"], &doc);
    assert!(stdout_str(&check).contains("counts = [2, 1]"));

    let out = run(&[
        "grothendieck",
        "corpus/collapse.sset",
        "--diagram",
        "Collapse",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["counts"][0], "3");
    let doc = v["result"]["document"].as_str().unwrap();
    let out = run_stdin(&["validate", "-"], doc);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn product_and_cylinder_match_library_counts() {
    let out = run(&[
        "product",
        "corpus/torus.sset",
        "--sset",
        "T",
        "--sset-b",
        "T",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    // chi(T x T) = 0: alternating sum of the reported counts vanishes
    let counts: Vec<i64> = v["result"]["counts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().parse().unwrap())
        .collect();
    let chi: i64 = counts
        .iter()
        .enumerate()
        .map(|(n, c)| if n % 2 == 0 { *c } else { -*c })
        .sum();
    assert_eq!(chi, 0);

    let out = run(&["cylinder", "corpus/torus.sset", "--sset", "T"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_str(&out);
    let out = run_stdin(&["validate", "-"], &doc);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn gen_outputs_reparse_and_validate() {
    for kind in ["poset", "sset", "diagram"] {
        let out = run(&["gen", "--kind", kind, "--seed", "5"]);
        assert_eq!(out.status.code(), Some(0), "kind {}", kind);
        let doc = stdout_str(&out);
        let check = run_stdin(&["validate", "-"], &doc);
        assert_eq!(check.status.code(), Some(0), "kind {}: {}", kind, doc);
        // determinism across invocations
        let again = run(&["gen", "--kind", kind, "--seed", "5"]);
        assert_eq!(out.stdout, again.stdout);
    }
}

#[test]
fn peeling_flag_is_output_invariant() {
    for file_sset in [("corpus/bd3.sset", "K"), ("corpus/torus.sset", "T")] {
        let direct = run(&["mobius", file_sset.0, "--sset", file_sset.1]);
        let peeled = run(&["mobius", file_sset.0, "--sset", file_sset.1, "--peeling"]);
        assert_eq!(direct.stdout, peeled.stdout);
        assert_eq!(direct.status.code(), Some(0));
    }
}

#[test]
fn partition_file_aggregation() {
    let dir = std::env::temp_dir().join("hocolim_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("partition.txt");
    std::fs::write(&path, "a b # arm and source\nc\n").unwrap();
    let out = run(&[
        "mobius",
        "corpus/span.sset",
        "--sset",
        "Nspan",
        "--partition",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    assert!(text.contains("mu[{a, b}] = 0"), "{}", text);
    assert!(text.contains("mu[{c}] = 1"));
}
