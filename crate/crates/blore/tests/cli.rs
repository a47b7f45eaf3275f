use std::process::{Command, Output};

use blore::report::read_sweep_json;

fn blore(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blore"))
        .args(args)
        .env_remove("BLORE_MAX_BLOCK_LEN")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = blore(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn pal_lists_factors() {
    assert_eq!(stdout(&["pal", "abbc"]), "a\nb\nc\nbb\nP=4\nrich=true\n");
}

#[test]
fn rich_prints_a_witness() {
    let text = stdout(&["rich", "a^2bab^2a^2"]);
    assert!(text.starts_with("rich=false\nwitness: "));
}

#[test]
fn power_and_rle() {
    assert_eq!(stdout(&["power", "aba", "5/3"]), "abaab\n");
    assert!(stdout(&["rle", "a^2b^3a^3"]).contains("run sequence: (2,3,3)"));
    assert_eq!(stdout(&["circ", "ab"]), "circularly_rich=true\n");
}

#[test]
fn br_subcommands() {
    let listed = stdout(&["br", "enum", "abbc"]);
    assert_eq!(listed.lines().count(), 7);
    assert!(stdout(&["br", "enum", "abbc", "--annotate"]).contains("bcab\tnot-rich"));
    assert_eq!(stdout(&["br", "count", "a^9"]), "1\n");
    assert_eq!(stdout(&["br", "member", "abbc", "bcba"]), "true\n");
    assert_eq!(stdout(&["br", "member", "abbc", "cbbc"]), "false\n");
}

#[test]
fn classify_outputs() {
    let text = stdout(&["classify", "abababab"]);
    assert!(text.contains("verdict: AllRich") && text.contains("rule: BinaryL8Table"));
    let text = stdout(&["classify", "abbc", "--check"]);
    assert!(text.contains("verdict: ExistsNonRich"));
    assert!(text.contains("witness: ") && text.contains("agrees: true"));
    let text = stdout(&["classify", "a^{20}"]);
    assert!(text.contains("a^20") || text.contains(&"a".repeat(20)));
    assert!(text.contains("rule: Unary"));
}

#[test]
fn long_words_render_in_caret_form() {
    assert_eq!(
        stdout(&["power", "ab", "21"]),
        format!("{}\n", "ab".repeat(21))
    );
    let text = stdout(&["classify", "a^41"]);
    assert!(text.starts_with("a^41\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(blore(&["pal", "ab#"]).status.code(), Some(2));
    assert_eq!(blore(&["power", "ab", "1/2"]).status.code(), Some(2));
    assert_eq!(blore(&["br", "count", "a^25"]).status.code(), Some(3));
    assert_eq!(
        blore(&["br", "count", "a^5", "--max-block-len", "4"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        blore(&["br", "count", "a^5", "--max-block-len", "5"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        blore(&["br", "count", "a", "--max-block-len", "65"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(blore(&["verify", "--max-len", "15"]).status.code(), Some(3));
    assert_eq!(blore(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn block_limit_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_blore"))
        .args(["br", "count", "ab^4"])
        .env("BLORE_MAX_BLOCK_LEN", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_json_round_trips_and_is_deterministic() {
    let strip = |text: &str| {
        let mut r = read_sweep_json(text).unwrap();
        r.wall_time_ms = 0;
        r
    };
    let a = stdout(&[
        "verify",
        "--alphabet",
        "2",
        "--max-len",
        "12",
        "--format",
        "json",
        "--jobs",
        "1",
    ]);
    let b = stdout(&[
        "verify",
        "--alphabet",
        "2",
        "--max-len",
        "12",
        "--format",
        "json",
        "--jobs",
        "4",
    ]);
    let r = strip(&a);
    assert!(r.mismatches.is_empty());
    assert_eq!(r, strip(&b));
    let reencoded = serde_json::to_value(read_sweep_json(&a).unwrap()).unwrap();
    let original: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(reencoded, original);
    for key in [
        "spec",
        "words_checked",
        "mismatches",
        "counts",
        "wall_time_ms",
    ] {
        assert!(original.get(key).is_some(), "{key}");
    }
}

#[test]
fn verify_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ternary.csv");
    stdout(&[
        "verify",
        "--alphabet",
        "3",
        "--max-len",
        "9",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("length,total_words,all_rich_count\n1,3,3\n"));
    assert_eq!(text.lines().count(), 10);
}

#[test]
fn sequence_and_suites() {
    assert!(stdout(&["sequence", "--max-len", "7"]).starts_with("2,4,8,16,32,64,128\n"));
    let laws = stdout(&[
        "verify",
        "--suite",
        "laws",
        "--samples",
        "50",
        "--seed",
        "3",
    ]);
    assert!(laws.contains("0 violations"));
    let fixtures = stdout(&["verify", "--suite", "fixtures"]);
    assert_eq!(fixtures.matches("PASS").count(), 7);
}

#[test]
fn dump_forms_lists_every_run_length() {
    let text = stdout(&["dump-forms"]);
    for l in 3..=8 {
        assert!(text.contains(&format!("L{l}.")), "L{l}");
    }
    assert!(text.contains("L6.T.a^n1-babab"));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["dump-forms", "--format", "json"])).unwrap();
    assert_eq!(json.as_array().unwrap().len(), text.lines().count());
}
