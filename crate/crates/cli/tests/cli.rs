//! End-to-end runs of the `curvereg` binary.
//!
//! Golden files under `tests/golden` pin the summary table (minus its
//! wall-time line) and the JSONL stream. Rewrite them with
//! `CURVEREG_BLESS=1 cargo test -p curvereg-cli`.

use std::path::{Path, PathBuf};
use std::process::Command;

use curvereg::verify::{CheckReport, Verdict};

fn dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

fn spec(name: &str) -> String {
    dir().join("specs").join(name).display().to_string()
}

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

fn curvereg(args: &[&str]) -> Out {
    let o = Command::new(env!("CARGO_BIN_EXE_curvereg")).args(args).output().expect("binary runs");
    Out { code: o.status.code().unwrap_or(-1), stdout: String::from_utf8(o.stdout).unwrap(), stderr: String::from_utf8(o.stderr).unwrap() }
}

fn golden(name: &str, actual: &str) {
    let path = dir().join("golden").join(name);
    if std::env::var_os("CURVEREG_BLESS").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert!(want == actual, "{name} differs from golden output:\n--- want\n{want}\n--- got\n{actual}");
}

fn without_wall_time(table: &str) -> String {
    let lines: Vec<&str> = table.lines().collect();
    let (last, rest) = lines.split_last().unwrap();
    assert!(last.starts_with("wall time "), "{last}");
    rest.iter().map(|l| format!("{l}\n")).collect()
}

fn parse_jsonl(text: &str) -> Vec<CheckReport> {
    text.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn reg_on_the_m4_construction() {
    let o = curvereg(&["reg", &spec("no_secant4.json")]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(o.stdout, "reg(I_C) = 4, Ξ = 4, maximal: yes\n");
}

#[test]
fn secants_of_the_twisted_configuration() {
    let o = curvereg(&["secant", &spec("twisted.json"), "--line", "e0,e3"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(o.stdout, "degree 3, extremal: yes\n");
    let o = curvereg(&["secant", &spec("twisted.json"), "--line", "1:1:1:1:0,1:0:0:1:0"]);
    assert_eq!(o.stdout, "degree 2, extremal: no\n");
    let o = curvereg(&["secant", &spec("twisted.json"), "--forms", "x1; x2; x4"]);
    assert_eq!(o.stdout, "degree 3, extremal: yes\n");
}

#[test]
fn invariants_and_betti_golden() {
    for (args, name) in [
        (vec!["invariants", "no_secant4.json"], "invariants_no_secant4.txt"),
        (vec!["betti", "no_secant4.json"], "betti_no_secant4.txt"),
        (vec!["build", "mixed.json"], "build_mixed.txt"),
        (vec!["invariants", "mixed.json", "--emit", "jsonl"], "invariants_mixed.jsonl"),
    ] {
        let mut a: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        a[1] = spec(&a[1]);
        let a: Vec<&str> = a.iter().map(|s| s.as_str()).collect();
        let o = curvereg(&a);
        assert_eq!(o.code, 0, "{}", o.stderr);
        golden(name, &o.stdout);
    }
}

#[test]
fn field_flag_overrides_document() {
    let o = curvereg(&["build", &spec("no_secant4.json"), "--field", "101"]);
    assert!(o.stdout.starts_with("P^4 over F_101,"), "{}", o.stdout);
    let o = curvereg(&["reg", &spec("twisted.json"), "--field", "rational"]);
    assert_eq!(o.stdout, "reg(I_C) = 3, Ξ = 3, maximal: yes\n");
}

#[test]
fn verify_all_seed_7() {
    let table = curvereg(&["verify", "--suite", "all", "--seed", "7"]);
    assert_eq!(table.code, 0, "{}", table.stdout);
    golden("verify_all_7.txt", &without_wall_time(&table.stdout));

    let stream = curvereg(&["verify", "--suite", "all", "--seed", "7", "--emit", "jsonl"]);
    assert_eq!(stream.code, 0);
    golden("verify_all_7.jsonl", &stream.stdout);
    let reports = parse_jsonl(&stream.stdout);
    assert!(reports.iter().all(|r| r.is_consistent()));
    let passes = reports.iter().filter(|r| r.verdict == Verdict::Pass).count();
    let total = table.stdout.lines().find(|l| l.starts_with("total")).unwrap();
    assert_eq!(total.split_whitespace().nth(1).unwrap().parse::<usize>().unwrap(), passes);
}

#[test]
fn verify_is_deterministic() {
    let a = curvereg(&["verify", "--suite", "intadd", "--seed", "11", "--emit", "jsonl"]);
    let b = curvereg(&["verify", "--suite", "intadd", "--seed", "11", "--emit", "jsonl"]);
    assert_eq!(a.stdout, b.stdout);
    let c = curvereg(&["verify", "--suite", "intadd", "--seed", "12", "--emit", "jsonl"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn fuzz_golden() {
    let o = curvereg(&["fuzz", "--seed", "3", "--max-degree", "6", "--count", "6", "--emit", "jsonl"]);
    assert_eq!(o.code, 0);
    golden("fuzz_3.jsonl", &o.stdout);
    assert_eq!(parse_jsonl(&o.stdout).len(), 12);
    let t = curvereg(&["fuzz", "--seed", "3", "--max-degree", "6", "--count", "6"]);
    golden("fuzz_3.txt", &without_wall_time(&t.stdout));
}

#[test]
fn spec_errors_carry_positions() {
    let o = curvereg(&["reg", &spec("bad_prime.json")]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("line 1, column 26: 32004 is not prime"), "{}", o.stderr);

    let o = curvereg(&["reg", &spec("bad_rnc.json")]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("line 5, column"), "{}", o.stderr);
    assert!(o.stderr.contains("rnc row 1 has 3 entries"), "{}", o.stderr);

    let o = curvereg(&["reg", &spec("unknown_key.json")]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("line 5, column"), "{}", o.stderr);
    assert!(o.stderr.contains("unknown field `comment`"), "{}", o.stderr);
}

#[test]
fn usage_errors() {
    assert_eq!(curvereg(&["verify", "--suite", "nope"]).code, 2);
    assert_eq!(curvereg(&["verify", "--field", "32004"]).code, 2);
    assert_eq!(curvereg(&["secant", &spec("twisted.json")]).code, 2);
    assert_eq!(curvereg(&["reg", "/nonexistent.json"]).code, 2);
    assert_eq!(curvereg(&["--help"]).code, 0);
}

#[test]
fn in_process_runner_matches_binary() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = curvereg_cli::run(["curvereg", "reg", &spec("no_secant4.json")], &mut out, &mut err);
    assert_eq!(code, 0);
    assert_eq!(String::from_utf8(out).unwrap(), curvereg(&["reg", &spec("no_secant4.json")]).stdout);
}

#[test]
fn betti_agrees_with_kernel_golden() {
    // the kernel golden file is itself checked against Koszul homology
    let kernel = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/golden/no_secant_4.txt")).unwrap();
    let section: String = kernel.split("## betti table of S/I\n").nth(1).unwrap().split("\n\n").next().unwrap().to_string() + "\n";
    let o = curvereg(&["betti", &spec("no_secant4.json")]);
    assert_eq!(o.stdout, section);
}
