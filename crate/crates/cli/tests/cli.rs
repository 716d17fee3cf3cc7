//! End-to-end checks of the binary: output shapes and the exit-code
//! contract (0 success/verified, 1 refuted/failed check, 2 usage/parse).

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mtlogic"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn mtlogic");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write_file(dir: &std::path::Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn translate_axiom_t() {
    let out = run_with_stdin(&["translate", "-"], "(imp (nabla (var p)) (var p))");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out).trim(),
        "(seq (fml (dia-nu (box-ni (var p)))) (fml (var p)))"
    );
}

#[test]
fn verify_correspondence_t() {
    let out = run_with_stdin(
        &["verify-correspondence", "--axiom", "T", "--max-size", "2"],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("size 2: 36 frames"), "{text}");
    assert!(text.contains("39 frames, 0 mismatches"), "{text}");
}

#[test]
fn verify_correspondence_kind_mismatch_is_usage_error() {
    let out = run_with_stdin(
        &["verify-correspondence", "--axiom", "T", "--kind", "c"],
        "",
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_proof_exit_codes() {
    let dir = std::env::temp_dir().join("mtlogic-cli-test");
    std::fs::create_dir_all(&dir).unwrap();

    let good = write_file(
        &dir,
        "t.proof",
        "(rule T (seq (hnu (fml (box-ni (var a)))) (fml (var a)))\n  (rule ni_L (seq (fml (box-ni (var a))) (cni (fml (var a))))\n    (rule Id_S (seq (fml (var a)) (fml (var a))))))",
    );
    let out = run_with_stdin(&["check-proof", &good, "--calc", "dmt-nabla", "--ext", "T"], "");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "ok");

    // same proof without the extension: failed check, exit 1
    let out = run_with_stdin(&["check-proof", &good, "--calc", "dmt-nabla"], "");
    assert_eq!(out.status.code(), Some(1));

    // ill-formed proof file: parse error, exit 2
    let bad = write_file(&dir, "bad.proof", "(rule Id_S (seq (fml (var p))");
    let out = run_with_stdin(&["check-proof", &bad], "");
    assert_eq!(out.status.code(), Some(2));

    // a rule name outside every calculus: parse error, exit 2
    let bogus = write_file(
        &dir,
        "bogus.proof",
        "(rule Bogus (seq (fml (var p)) (fml (var p))))",
    );
    let out = run_with_stdin(&["check-proof", &bogus], "");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown rule"));

    // a real rule of the other calculus: node-located check error, exit 1
    let foreign = write_file(
        &dir,
        "foreign.proof",
        "(rule cap_L (seq (fml (cap (box-ni (var p)) (box-ni (var q)))) (fml (box-ni (var p))))\n  (rule W_N (seq (hcap (fml (box-ni (var p))) (fml (box-ni (var q)))) (fml (box-ni (var p))))\n    (rule Id_S (seq (fml (box-ni (var p))) (fml (box-ni (var p)))))))",
    );
    let out = run_with_stdin(&["check-proof", &foreign, "--calc", "dmt-nabla"], "");
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown rule"));
}

#[test]
fn valid_exit_codes() {
    let dir = std::env::temp_dir().join("mtlogic-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let frame = write_file(&dir, "f1.nframe", "(nframe (worlds 0) (nu 0 ((0))))");
    let valid_formula = write_file(&dir, "t.st", "(imp (nabla (var p)) (var p))");
    let invalid_formula = write_file(&dir, "np.st", "(nabla (var p))");

    let out = run_with_stdin(&["valid", &frame, &valid_formula], "");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "valid");

    let out = run_with_stdin(&["valid", &frame, &invalid_formula], "");
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out).trim(), "invalid");
}

#[test]
fn star_unstar_pipeline() {
    let dir = std::env::temp_dir().join("mtlogic-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let frame = write_file(&dir, "round.nframe", "(nframe (worlds 0) (nu 0 ((0))))");

    let starred = run_with_stdin(&["star", &frame], "");
    assert_eq!(starred.status.code(), Some(0));
    let ts = stdout(&starred);

    let supported = run_with_stdin(&["supported", "-"], &ts);
    assert_eq!(supported.status.code(), Some(0));

    let back = run_with_stdin(&["unstar", "-"], &ts);
    assert_eq!(back.status.code(), Some(0));
    assert_eq!(stdout(&back).trim(), "(nframe (worlds 0) (nu 0 ((0))))");

    // an unsupported frame: exit 1 from supported, and unstar refuses
    let empty = "(tsframe n (xs 0) (ys 0) (rni) (rnotni) (rnu) (rnuc))";
    let out = run_with_stdin(&["supported", "-"], empty);
    assert_eq!(out.status.code(), Some(1));
    let out = run_with_stdin(&["unstar", "-"], empty);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn eval_and_parse() {
    let dir = std::env::temp_dir().join("mtlogic-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let frame = write_file(&dir, "e.nframe", "(nframe (worlds 0) (nu 0 ((0))))");
    let formula = write_file(&dir, "e.st", "(nabla (var p))");
    let valuation = write_file(&dir, "e.val", "(valuation (p 0))");
    let out = run_with_stdin(&["eval", &frame, &formula, &valuation], "");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "(0)");

    // canonical reprint, comments stripped
    let out = run_with_stdin(&["parse", "-"], "# c\n(and (var p)\n  (var q))");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "(and (var p) (var q))");

    // sort error in a formula: exit 2 with a span
    let out = run_with_stdin(&["parse", "-"], "(dia-nu (var p))");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("sort error"));
}

#[test]
fn classify_and_search() {
    let out = run_with_stdin(&["classify", "-"], "(ineq (dia-nu (box-ni (var p))) (var p))");
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("analytic-inductive"));

    // row 4: not analytic, exit 1
    let out = run_with_stdin(
        &["classify", "-"],
        "(ineq (dia-nu (box-ni (dia-nu (box-ni (var p))))) (box-nuc (dia-notni (var p))))",
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("not-analytic-inductive"));

    let out = run_with_stdin(
        &[
            "search-proof", "-", "--calc", "dmt-nabla", "--ext", "T", "--depth", "4",
        ],
        "(seq (hnu (fml (box-ni (var a)))) (fml (var a)))",
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("(rule T"));

    let out = run_with_stdin(
        &["search-proof", "-", "--depth", "3"],
        "(seq (fml (var p)) (fml (var q)))",
    );
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn rule_soundness_runs() {
    let out = run_with_stdin(
        &["rule-soundness", "--rule", "T", "--calc", "dmt-nabla"],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("0 violations"));

    let out = run_with_stdin(
        &[
            "rule-soundness", "--rule", "cap_R", "--calc", "dmt-cond", "--nx", "1", "--ny", "2",
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(0));

    let out = run_with_stdin(&["rule-soundness", "--rule", "nonexistent"], "");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lines_output_mode() {
    let out = run_with_stdin(
        &[
            "verify-correspondence", "--axiom", "ID", "--max-size", "1", "--output", "lines",
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().any(|l| l == "size\t1\t4"), "{text}");
    assert!(text.lines().any(|l| l == "total\t4\t0"), "{text}");
}
