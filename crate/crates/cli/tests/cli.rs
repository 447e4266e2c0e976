use std::process::{Command, Output};

use yangian_core::lift::trace_special;
use yangian_core::scalar::Scalar;
use yangian_core::stable::{normal_from_json, relation_from_json, relation_to_json};
use yangian_core::words::Word;

fn yangian(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_yangian")).args(args).env_remove("YANGIAN_SEED").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn stable_examples() {
    let o = yangian(&["stable", "--L", "1", "--w", "1", "--wt", "1", "--form", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        r#"{"L":1,"w":"1","wt":"1","form":1,"terms":[{"tag":"KJ.IL","z1":"","z2":"1","coeff":1},{"tag":"KJ.IL","z1":"1","z2":"","coeff":-1}]}"#
    );
    let o = yangian(&["stable", "--L", "2", "--w", "1", "--wt", "2", "--form", "1"]);
    assert!(stdout(&o).contains(r#""terms":[]"#));
    let o = yangian(&["stable", "--L", "2", "--w", "2", "--wt", "12", "--form", "1"]);
    let text = stdout(&o);
    let rel = relation_from_json(text.trim()).unwrap();
    assert_eq!(rel.terms.len(), 2);
    assert_eq!(relation_to_json(&rel), text.trim());
}

#[test]
fn stable_json_file_and_normal_order() {
    let dir = std::env::temp_dir().join(format!("yangian-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("rel.json");
    let o = yangian(&[
        "stable",
        "--L",
        "2",
        "--w",
        "12",
        "--wt",
        "21",
        "--form",
        "1",
        "--normal",
        "IJ<IL<KJ<KL",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let rel = normal_from_json(text.trim()).unwrap();
    assert!(rel.is_normal());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn deterministic_output() {
    let args = ["stable", "--L", "2", "--w", "121", "--wt", "12", "--form", "2"];
    assert_eq!(yangian(&args).stdout, yangian(&args).stdout);
    let args = ["verify", "--suite", "poisson", "--L", "2", "--max-len", "3", "--seed", "9"];
    assert_eq!(yangian(&args).stdout, yangian(&args).stdout);
}

#[test]
fn verify_examples() {
    for args in [
        vec!["verify", "--suite", "yangian", "--max-degree", "6"],
        vec!["verify", "--suite", "projection", "--L", "2", "--max-len", "3", "--N", "3", "4", "--s", "0", "1", "-2"],
        vec!["verify", "--suite", "poisson", "--L", "2", "--max-len", "5"],
        vec!["verify", "--suite", "stable", "--L", "2", "--max-len", "3", "--N", "4", "5"],
        vec!["verify", "--suite", "pbw", "--N", "2", "3"],
    ] {
        let o = yangian(&args);
        let out = stdout(&o);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {out}");
        assert!(out.lines().all(|l| l.starts_with("PASS ")), "{out}");
    }
}

#[test]
fn seed_from_environment() {
    let run = |seed: &str| {
        Command::new(env!("CARGO_BIN_EXE_yangian"))
            .args(["verify", "--suite", "pbw", "--N", "2"])
            .env("YANGIAN_SEED", seed)
            .output()
            .unwrap()
    };
    assert_eq!(run("5").status.code(), Some(0));
}

#[test]
fn lift_examples() {
    let o = yangian(&["lift", "--L", "1", "--w", "11", "--i", "1", "--j", "2", "--N", "3", "--s", "0", "--shifted"]);
    assert_eq!(
        stdout(&o).trim(),
        "-3 * E[1,2|1] + 1 * E[1,1|1] E[1,2|1] + 1 * E[1,2|1] E[2,2|1] + 1 * E[1,3|1] E[3,2|1]"
    );
    let o = yangian(&["lift", "--L", "2", "--w", "1", "--i", "1", "--j", "1", "--N", "2", "--s", "5"]);
    assert_eq!(stdout(&o).trim(), "1 * E[1,1|1]");

    let o = yangian(&["lift", "--L", "2", "--w", "121", "--N", "3", "--s", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let n = 3;
    let e = |t: &str| trace_special(&Word::parse(t, 2).unwrap(), n).unwrap();
    let decomposed =
        e("112").add(&e("1").multiply(&e("2")).unwrap()).unwrap().sub(&e("12").scale(&Scalar::from_int(3))).unwrap();
    assert_eq!(stdout(&o).trim(), decomposed.to_string());
}

#[test]
fn eval_command() {
    let dir = std::env::temp_dir().join(format!("yangian-eval-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("x.json");
    std::fs::write(&path, r#"[[["1","2"],["3","4"]],[["0","1"],["1","0"]]]"#).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(stdout(&yangian(&["eval", "--matrices", p, "--w", "12"])).trim(), "5");
    assert_eq!(stdout(&yangian(&["eval", "--matrices", p, "--w", "12", "--i", "1", "--j", "1"])).trim(), "2");
    assert_eq!(yangian(&["eval", "--matrices", p, "--w", "13"]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["stable", "--L", "2", "--w", "3", "--wt", "1"],
        vec!["stable", "--L", "2", "--w", "1", "--wt", "1", "--form", "7"],
        vec!["stable", "--L", "2", "--w", "1", "--wt", "1", "--normal", "IJ<IJ<KJ<KL"],
        vec!["verify", "--suite", "nope"],
        vec!["verify", "--suite", "projection", "--N", "1"],
        vec!["lift", "--L", "2", "--w", "1", "--i", "4", "--j", "1", "--N", "3"],
        vec!["lift", "--L", "2", "--w", "1", "--i", "1", "--N", "3"],
        vec!["bogus"],
    ] {
        assert_eq!(yangian(&args).status.code(), Some(2), "{args:?}");
    }
}
