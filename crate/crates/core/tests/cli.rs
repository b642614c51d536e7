use std::process::Command;

use clap::CommandFactory;
use yfock::cli::Cli;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_yfock")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

const GOLDEN: &[(&str, &[&str])] = &[
    ("jack_n1_2.json", &["jack", "--N", "1", "--lambda", "2"]),
    ("jack_n2_2.json", &["jack", "--N", "2", "--lambda", "2"]),
    ("norm_n2_2.json", &["norm", "--N", "2", "--lambda", "2", "--method", "both"]),
    ("norm_n2_11.json", &["norm", "--N", "2", "--lambda", "1,1", "--method", "both"]),
    ("act_n2_xminus_1_0_b1.json", &["act", "--N", "2", "--gen", "x-", "--i", "1", "--r", "0", "--basis", "b", "--lambda", "1"]),
    ("act_n2_h_1_0_b1.json", &["act", "--N", "2", "--gen", "h", "--i", "1", "--r", "0", "--basis", "b", "--lambda", "1"]),
    ("act_n2_Xminus_1_0_P1.json", &["act", "--N", "2", "--gen", "X-", "--i", "1", "--r", "0", "--basis", "P", "--lambda", "1"]),
    ("gz_n2_21_scheme.json", &["gz", "--N", "2", "--lambda", "2,1", "--i", "1", "--op", "scheme"]),
    ("quiver_n2_2_tangent.json", &["quiver", "--N", "2", "--lambda", "2", "--op", "tangent"]),
    ("quiver_n2_2_form.json", &["quiver", "--N", "2", "--lambda", "2", "--op", "form"]),
    ("expand_h_n2_empty_0.json", &["expand-h", "--N", "2", "--lambda", "", "--i", "0", "--order", "3"]),
    ("check_appendix.json", &["check", "--N", "2", "--suite", "appendix", "--rmax", "2"]),
];

#[test]
fn goldens_are_byte_exact() {
    for (file, args) in GOLDEN {
        let (code, out, err) = run(args);
        assert_eq!(code, 0, "{args:?}: {err}");
        assert_eq!(out, golden(file), "{args:?}");
    }
}

#[test]
fn reruns_are_identical() {
    for (_, args) in GOLDEN {
        assert_eq!(run(args), run(args));
    }
}

#[test]
fn golden_values_by_hand() {
    // Independent of the golden files: the literal values.
    let (_, out, _) = run(&["jack", "--N", "1", "--lambda", "2"]);
    assert!(out.contains(r#"{"coeff":"(e1 + e2)/(e1 - e2)","partition":"1,1"}"#));
    let (_, out, _) = run(&["jack", "--N", "2", "--lambda", "2"]);
    assert!(out.contains(r#"{"coeff":"-(e1 + e2)/(e1 - e2)","partition":"1,1"}"#));
    let (_, out, _) = run(&["norm", "--N", "2", "--lambda", "2", "--method", "both"]);
    assert!(out.contains(r#""formula":"-2*e2/(e1 - e2)""#));
    assert!(out.contains(r#""gram_schmidt":"-2*e2/(e1 - e2)""#));
    let (_, out, _) = run(&["norm", "--N", "2", "--lambda", "1,1", "--method", "formula"]);
    assert!(out.contains(r#""formula":"(e1 - e2)/(2*e1)""#));
    let (_, out, _) = run(&["act", "--N", "2", "--gen", "h", "--i", "1", "--lambda", "1"]);
    assert!(out.contains(r#""terms":[{"coeff":"2","partition":"1"}]"#));
}

#[test]
fn version_names_variables() {
    let (code, out, _) = run(&["--version"]);
    assert_eq!(code, 0);
    assert_eq!(out, "yfock 0.1.0 (variables: e1, e2)\n");
}

#[test]
fn malformed_partition_is_domain_error() {
    let (code, out, err) = run(&["jack", "--N", "2", "--lambda", "1,2"]);
    assert_eq!(code, 3);
    assert!(out.is_empty());
    assert_eq!(err.lines().count(), 1);
    assert!(err.starts_with("error: domain:"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [&["frobnicate"][..], &["norm", "--N", "2"], &["act", "--N", "2", "--gen", "y+", "--i", "0", "--lambda", "1"]] {
        let (code, _, err) = run(args);
        assert_eq!(code, 2, "{args:?}");
        assert_eq!(err.lines().count(), 1, "{err}");
        assert!(err.starts_with("error: usage:"));
    }
}

#[test]
fn unsupported_rank_is_domain_error() {
    let (code, _, err) = run(&["check", "--N", "1", "--suite", "affine-yangian", "--max-degree", "2"]);
    assert_eq!(code, 3);
    assert!(err.contains("N >= 2"));
}

#[test]
fn check_streams_one_object_per_instance() {
    let (code, out, _) = run(&["check", "--N", "3", "--suite", "affine-lie", "--max-degree", "5"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines.len() > 10);
    for l in lines {
        let v: serde_json::Value = serde_json::from_str(l).unwrap();
        assert_eq!(v["pass"], true);
        assert_eq!(v["suite"], "affine-lie");
    }
}

#[test]
fn check_exit_code_is_deterministic_across_jobs() {
    let a = run(&["check", "--N", "2", "--suite", "affine-yangian", "--max-degree", "3", "--rmax", "1", "--jobs", "1"]);
    let b = run(&["check", "--N", "2", "--suite", "affine-yangian", "--max-degree", "3", "--rmax", "1", "--jobs", "4"]);
    assert_eq!(a.0, 0);
    assert_eq!(a, b);
}

#[test]
fn text_mode_renders_same_data() {
    let (code, out, _) = run(&["--text", "norm", "--N", "2", "--lambda", "2"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "formula: -2*e2/(e1 - e2)"));
}

#[test]
fn every_verb_has_a_golden() {
    let cmd = Cli::command();
    for sub in cmd.get_subcommands() {
        let name = sub.get_name();
        assert!(GOLDEN.iter().any(|(_, args)| args[0] == name), "verb {name} has no golden test");
    }
}

#[test]
fn act_converts_between_bases() {
    // Chevalley lowering on s_(1): both addable 1-cells.
    let (code, out, _) = run(&["act", "--N", "2", "--gen", "f", "--i", "1", "--basis", "s", "--lambda", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains(r#""terms":[{"coeff":"1","partition":"2"},{"coeff":"1","partition":"1,1"}]"#));
    // The same generator on the Jack basis agrees with the level-zero Yangian lowering.
    let (_, via_p, _) = run(&["act", "--N", "2", "--gen", "f", "--i", "1", "--basis", "P", "--lambda", "1"]);
    let (_, direct, _) = run(&["act", "--N", "2", "--gen", "X-", "--i", "1", "--basis", "P", "--lambda", "1"]);
    let terms = |s: &str| serde_json::from_str::<serde_json::Value>(s).unwrap()["result"]["terms"].clone();
    assert_eq!(terms(&via_p), terms(&direct));
}
