use std::path::Path;
use std::process::{Command, Output};

use griesmer_lab::bounds::BoundReport;
use griesmer_lab::{parse_code, HadamardMatrix, SearchResult, SearchStatus};
use griesmer_lab_cli::ReportDocument;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_griesmer-lab")).args(args).output().expect("binary runs")
}

fn run_ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    serde_json::from_str(&run_ok(&all)).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn bounds_for_the_gap_case() {
    let text = run_ok(&["bounds", "--q", "2", "--k", "4", "--d", "18"]);
    assert!(text.contains("griesmer") && text.contains("35"));
    let raw = run_ok(&["bounds", "--q", "2", "--k", "4", "--d", "18", "--json"]);
    let report: BoundReport = serde_json::from_str(&raw).unwrap();
    assert_eq!(report.best.linear, 35);
    assert!(report.best.systematic < 35);
    let again: BoundReport = serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
    assert_eq!(again, report);
}

#[test]
fn bounds_by_size_and_trivial_dimension() {
    assert_eq!(json(&["bounds", "--q", "2", "--M", "8", "--d", "5"])["best"]["any"], 10);
    let r = json(&["bounds", "--q", "2", "--k", "1", "--d", "7"]);
    for e in r["entries"].as_array().unwrap() {
        assert_eq!(e["value"], 7, "{e}");
    }
}

#[test]
fn bad_flags_exit_with_usage() {
    assert_eq!(exit_code(&["bounds", "--q", "2", "--k", "4", "--M", "16", "--d", "18"]), 2);
    assert_eq!(exit_code(&["bounds", "--q", "2", "--d", "18"]), 2);
    assert_eq!(exit_code(&["bounds", "--q", "6", "--k", "2", "--d", "3"]), 2);
    assert_eq!(exit_code(&["search", "--q", "2", "--d", "3", "--n-limit", "5"]), 2);
    assert_eq!(exit_code(&["frobnicate"]), 2);
}

#[test]
fn counterexample_file_and_analysis() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c4.code");
    let out = run_ok(&["construct", "counterexample", "--k", "4", "--out", path_str(&file)]);
    assert!(out.contains("VIOLATED by 1"), "{out}");
    let code = parse_code(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!((code.n(), code.size()), (34, 16));

    let summary = run_ok(&["analyze", path_str(&file)]);
    let first = summary.lines().next().unwrap();
    assert_eq!(first, "(34,16,18)₂ systematic equidistant; Griesmer(linear)=35: VIOLATED by 1");
    let a = json(&["analyze", path_str(&file)]);
    assert_eq!(a["analysis"]["params"]["d"], 18);
    assert_eq!(a["analysis"]["linear"], false);
}

#[test]
fn dim3_and_simplex_files() {
    let dir = tempfile::tempdir().unwrap();
    let x = dir.path().join("x.code");
    run_ok(&["construct", "dim3", "--d", "7", "--out", path_str(&x)]);
    let code = parse_code(&std::fs::read_to_string(&x).unwrap()).unwrap();
    assert_eq!((code.n(), code.size(), code.min_distance().unwrap()), (13, 8, 7));
    assert!(code.is_linear());

    let s = dir.path().join("s3.code");
    run_ok(&["construct", "simplex", "--k", "3", "--out", path_str(&s)]);
    let summary = run_ok(&["analyze", path_str(&s)]);
    assert!(summary.starts_with("(7,8,4)₂ linear equidistant; meets Griesmer"), "{summary}");
}

#[test]
fn hadamard_files() {
    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("h36.had");
    let info = json(&["construct", "hadamard", "--order", "36", "--out", path_str(&h)]);
    assert_eq!(info["recipe"]["family"], "paley2");
    let m = HadamardMatrix::parse(&std::fs::read_to_string(&h).unwrap()).unwrap();
    assert_eq!(m.order(), 36);
    assert_eq!(exit_code(&["construct", "hadamard", "--order", "52"]), 3);
    assert_eq!(exit_code(&["construct", "counterexample", "--k", "12"]), 3);
}

#[test]
fn levenshtein_and_simplex_sequence() {
    let l = json(&["construct", "levenshtein", "--order", "20", "--size", "16"]);
    assert_eq!(l["analysis"]["params"]["n"], 19);
    assert_eq!(l["analysis"]["params"]["d"], 10);
    assert_eq!(l["analysis"]["equidistant"], true);
    let s = json(&["construct", "simplex-seq", "--k", "3", "--h", "2"]);
    assert_eq!(s["analysis"]["params"]["n"], 14);
    assert_eq!(s["analysis"]["params"]["d"], 8);
}

#[test]
fn malformed_files_exit_with_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.code");
    std::fs::write(&bad, "codefile v1\nq 2\nn 3\n000\n1x1\n").unwrap();
    let out = run(&["analyze", path_str(&bad)]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 5"));
    assert_eq!(exit_code(&["analyze", path_str(&dir.path().join("missing.code"))]), 4);
}

#[test]
fn searches() {
    let cases: [(&[&str], u64); 3] = [
        (&["search", "--q", "2", "--M", "8", "--d", "5", "--n-limit", "10"], 10),
        (&["search", "--q", "2", "--k", "2", "--systematic", "--d", "3", "--n-limit", "8"], 5),
        (&["search", "--q", "2", "--M", "2", "--d", "6", "--n-limit", "6"], 6),
    ];
    for (args, expected) in cases {
        let mut all = args.to_vec();
        all.push("--json");
        let raw = run_ok(&all);
        let r: SearchResult = serde_json::from_str(&raw).unwrap();
        assert_eq!((r.status, r.value), (SearchStatus::Found, Some(expected)), "{args:?}");
        let back: SearchResult = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
    }
}

#[test]
fn search_outcomes_and_exit_codes() {
    let r = json(&["search", "--q", "2", "--M", "8", "--d", "5", "--n-limit", "9"]);
    assert_eq!(r["status"], "exhausted");
    let out = run(&["search", "--q", "2", "--d", "4", "--n-limit", "9", "--max-size", "--budget-nodes", "10"]);
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn results_do_not_depend_on_threads() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("duration_ms");
        v
    };
    let args = ["search", "--q", "2", "--M", "8", "--d", "6", "--n-limit", "12"];
    let a = strip(json(&args));
    let b = strip(json(&[&args[..], &["--sequential"]].concat()));
    let c = Command::new(env!("CARGO_BIN_EXE_griesmer-lab"))
        .args(args)
        .arg("--json")
        .env("GRIESMER_LAB_THREADS", "2")
        .output()
        .unwrap();
    let c = strip(serde_json::from_slice(&c.stdout).unwrap());
    assert_eq!(a, b);
    assert_eq!(a, c);
    let bad =
        Command::new(env!("CARGO_BIN_EXE_griesmer-lab")).args(args).env("GRIESMER_LAB_THREADS", "0").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verification_suites() {
    assert!(run_ok(&["verify", "lemmas", "--rmax", "12"]).contains("lemmas: pass"));
    assert!(run_ok(&["verify", "optimal4", "--dmax", "6"]).contains("all optimal size-4 codes linear"));
    assert!(run_ok(&["verify", "counterexample", "--k", "4"]).contains("34 < 35"));
    assert!(run_ok(&["verify", "n4", "--dmax", "6"]).contains("N2_4: pass"));
    assert!(run_ok(&["verify", "n8", "--dmax", "6"]).contains("N2_8: pass"));
    let fam = json(&["verify", "griesmer-family", "--q", "2", "--d", "3"]);
    assert_eq!(fam["pass"], true);
    assert_eq!(exit_code(&["verify", "n8", "--dmax", "7"]), 2);
}

#[test]
fn table1_report() {
    let text = run_ok(&["report", "table1"]);
    assert!(text.contains("bound_b"));
    let raw = run_ok(&["report", "table1", "--json"]);
    let doc: ReportDocument = serde_json::from_str(&raw).unwrap();
    assert_eq!(doc.values("bound_b").unwrap(), vec![7, 9, 5, 7, 6, 7]);
    assert_eq!(doc.values("bound_b (published)").unwrap(), vec![7, 9, 5, 7, 6, 7]);
    assert_eq!(doc.values("elias (published)").unwrap(), vec![8, 10, 6, 8, 7, 8]);
    assert_eq!(doc.values("elias").unwrap().len(), 6);
    assert!(doc.mismatches.is_empty());
    assert!(!doc.citations.is_empty() && doc.generated_at > 0);
    let back: ReportDocument = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
    assert_eq!(back, doc);
}

#[test]
fn construct_to_stdout_is_a_clean_file() {
    let text = run_ok(&["construct", "simplex", "--k", "3"]);
    let code = parse_code(&text).unwrap();
    assert_eq!((code.n(), code.size()), (7, 8));
    let j = json(&["construct", "simplex", "--k", "3"]);
    assert!(parse_code(j["file"].as_str().unwrap()).unwrap().same_words(&code));
}
