//! End-to-end tests of the command-line interface, run in process against
//! `jfrob::cli::run` with captured output. Values asserted here are frozen
//! from independently checked computations, so these double as regression
//! tests for the exact report formats. The hard-limit override is tested
//! through a subprocess because it reads the environment.

use serde_json::{json, Value};

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["jfrob"];
    argv.extend_from_slice(args);
    let code = jfrob::cli::run(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).expect("stdout is utf-8"),
        err: String::from_utf8(err).expect("stderr is utf-8"),
    }
}

fn json_lines(text: &str) -> Vec<Value> {
    text.lines()
        .map(|l| serde_json::from_str(l).expect("each line parses as json"))
        .collect()
}

// ---- point queries ----

#[test]
fn gj_prints_plain_value() {
    let r = run(&["gj", "--tuple", "3,5,8", "--j", "14"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out, "52\n");
    assert_eq!(r.err, "");
}

#[test]
fn gj_prints_zero_for_absent() {
    let r = run(&["gj", "--tuple", "2,3,12", "--j", "3"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out, "0\n");
}

#[test]
fn gj_methods_agree() {
    for method in ["auto", "dp", "reduced", "oracle"] {
        let r = run(&["gj", "--tuple", "3,10,16", "--j", "14", "--method", method]);
        assert_eq!(r.code, 0, "method {method}");
        assert_eq!(r.out, "107\n", "method {method}");
    }
}

#[test]
fn gj_json_record() {
    let r = run(&["gj", "--tuple", "3,5,8", "--j", "14", "--method", "dp", "--format", "json"]);
    assert_eq!(r.code, 0);
    let v: Value = serde_json::from_str(r.out.trim_end()).unwrap();
    assert_eq!(
        v,
        json!({
            "op": "gj", "tuple": [3, 5, 8], "j": 14, "method": "dp",
            "value": 52, "exists": true, "scan_limit": 55
        })
    );
}

#[test]
fn gj_auto_picks_reduced_only_when_reduction_exists() {
    let r = run(&["gj", "--tuple", "2,3,12", "--j", "3", "--format", "json"]);
    let v: Value = serde_json::from_str(r.out.trim_end()).unwrap();
    assert_eq!(v["method"], "reduced");
    assert_eq!(v["exists"], json!(false));
    assert_eq!(v["scan_limit"], Value::Null);

    let r = run(&["gj", "--tuple", "3,5,8", "--j", "14", "--format", "json"]);
    let v: Value = serde_json::from_str(r.out.trim_end()).unwrap();
    assert_eq!(v["method"], "dp");
}

#[test]
fn fj_json_record() {
    let r = run(&["fj", "--tuple", "3,10,16", "--j", "14", "--format", "json"]);
    assert_eq!(r.code, 0);
    let v: Value = serde_json::from_str(r.out.trim_end()).unwrap();
    assert_eq!(
        v,
        json!({
            "op": "fj", "tuple": [3, 10, 16], "j": 14, "method": "dp",
            "value": 136, "exists": true, "scan_limit": 139
        })
    );
}

#[test]
fn denumerant_lists_representations() {
    let r = run(&["denumerant", "--tuple", "3,5,8", "--n", "16", "--list", "--format", "json"]);
    assert_eq!(r.code, 0);
    let v: Value = serde_json::from_str(r.out.trim_end()).unwrap();
    assert_eq!(
        v,
        json!({
            "op": "denumerant", "tuple": [3, 5, 8], "n": 16, "positive": false,
            "count": "3", "representations": [[0, 0, 2], [1, 1, 1], [2, 2, 0]]
        })
    );
}

#[test]
fn denumerant_counts_positively() {
    let r = run(&["denumerant", "--tuple", "3,5,8", "--n", "16", "--positive"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out, "1\n");
}

// ---- tables ----

#[test]
fn table_csv_shows_both_sequences() {
    let r = run(&["table", "--tuple", "2,3,12", "--max-j", "6", "--format", "csv"]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.out,
        "tuple,j,g_value,g_exists,f_value,f_exists\n\
         \"2 3 12\",0,1,true,18,true\n\
         \"2 3 12\",1,7,true,24,true\n\
         \"2 3 12\",2,13,true,30,true\n\
         \"2 3 12\",3,0,false,0,false\n\
         \"2 3 12\",4,19,true,36,true\n\
         \"2 3 12\",5,0,false,0,false\n\
         \"2 3 12\",6,25,true,42,true\n"
    );
}

#[test]
fn table_json_rows() {
    let r = run(&["table", "--tuple", "2,3,12", "--max-j", "3", "--format", "json"]);
    assert_eq!(r.code, 0);
    let rows = json_lines(&r.out);
    assert_eq!(rows.len(), 4);
    assert_eq!(
        rows[3],
        json!({"tuple": [2, 3, 12], "j": 3, "g_value": 0, "g_exists": false, "f_value": 0, "f_exists": false})
    );
}

#[test]
fn reduce_json_chain() {
    let r = run(&["reduce", "--tuple", "6,10,15", "--format", "json"]);
    assert_eq!(r.code, 0);
    let v: Value = serde_json::from_str(r.out.trim_end()).unwrap();
    assert_eq!(v["original"], json!([6, 10, 15]));
    assert_eq!(v["final_tuple"], json!([1, 1, 1]));
    assert_eq!(v["transform"], json!({"scale": 30, "offset": 59}));
    assert_eq!(v["steps"].as_array().unwrap().len(), 3);
    assert_eq!(
        v["steps"][0],
        json!({"pivot_index": 0, "divisor": 5, "reduced": [6, 2, 3], "transform": {"scale": 5, "offset": 24}})
    );
}

#[test]
fn corollary_csv_table() {
    let r = run(&["corollary", "--a1", "2", "--a2", "3", "--m", "2", "--max-j", "4", "--format", "csv"]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.out,
        "tuple,j,g_value,g_exists\n\
         \"2 3 12\",0,1,true\n\
         \"2 3 12\",1,7,true\n\
         \"2 3 12\",2,13,true\n\
         \"2 3 12\",3,0,false\n\
         \"2 3 12\",4,19,true\n"
    );
}

// ---- verify ----

#[test]
fn verify_passes_on_reducible_tuple() {
    let r = run(&["verify", "--tuple", "3,10,16", "--max-j", "6"]);
    assert_eq!(r.code, 0, "stderr: {}", r.err);
    assert!(r.out.contains("all checks passed"), "got: {}", r.out);
    assert!(r.out.contains("g transport pivot 0 (divisor 2): ok"), "got: {}", r.out);
    assert!(!r.out.contains("FAIL"), "got: {}", r.out);
}

#[test]
fn verify_passes_on_degenerate_tuple() {
    let r = run(&["verify", "--tuple", "1,1,5", "--max-j", "4"]);
    assert_eq!(r.code, 0, "stdout: {}\nstderr: {}", r.out, r.err);
    assert!(r.out.contains("all checks passed"));
}

// ---- sweeps ----

#[test]
fn search_inversions_reports_known_pair() {
    let r = run(&["search-inversions", "--k", "3", "--max-gen", "8", "--max-j", "15"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out, "tuple,j,g_j,g_j_plus_1\n\"3 5 8\",14,52,51\n");
    assert!(
        r.err.starts_with("scanned 95 tuples (k=3, max_gen=8, max_j=15); 1 inversion(s);"),
        "got: {}",
        r.err
    );
}

#[test]
fn check_conjecture_empty_space_prints_header_only() {
    let r = run(&["check-conjecture", "--k", "3", "--max-gen", "12"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out, "tuple,g_0,g_1\n");
    assert!(r.err.starts_with("scanned 287 tuples (k=3, max_gen=12); 0 counterexample(s);"));
}

#[test]
fn check_conjecture_reports_counterexample() {
    let r = run(&["check-conjecture", "--k", "4", "--max-gen", "5", "--format", "json"]);
    assert_eq!(r.code, 0);
    let rows = json_lines(&r.out);
    assert_eq!(rows, vec![json!({"tuple": [2, 4, 5, 5], "g_0": 3, "g_1": 2})]);
    assert!(r.err.contains("COUNTEREXAMPLE: (2,4,5,5) g_0=3 g_1=2"), "got: {}", r.err);
}

#[test]
fn sweep_on_degenerate_shape_is_empty() {
    let r = run(&["search-inversions", "--k", "1", "--max-gen", "5", "--max-j", "3"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out, "tuple,j,g_j,g_j_plus_1\n");
}

#[test]
fn out_flag_writes_report_to_file() {
    let path = format!("{}/conjecture_report.csv", env!("CARGO_TARGET_TMPDIR"));
    let r = run(&["check-conjecture", "--k", "3", "--max-gen", "6", "--out", &path]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out, "");
    assert!(r.err.contains(&format!("report written to {path}")));
    let body = std::fs::read_to_string(&path).unwrap();
    let direct = run(&["check-conjecture", "--k", "3", "--max-gen", "6"]);
    assert_eq!(body, direct.out);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = ["search-inversions", "--k", "3", "--max-gen", "8", "--max-j", "15"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.out, second.out);
}

// ---- exit codes and argument errors ----

#[test]
fn help_and_version_exit_zero() {
    let r = run(&["--help"]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("Usage: jfrob"));
    assert_eq!(r.err, "");

    let r = run(&["--version"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out, "jfrob 0.1.0\n");

    let r = run(&["gj", "--help"]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("--method"));
}

#[test]
fn missing_subcommand_exits_two() {
    let r = run(&[]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("Usage"));
}

#[test]
fn unknown_flag_exits_two() {
    let r = run(&["gj", "--tuple", "3,5,8", "--wat"]);
    assert_eq!(r.code, 2);
}

#[test]
fn malformed_tuple_exits_two() {
    let r = run(&["gj", "--tuple", "3,x,8", "--j", "1"]);
    assert_eq!(r.code, 2);
    assert!(r.err.starts_with("error:"));
}

#[test]
fn zero_generator_exits_two() {
    let r = run(&["gj", "--tuple", "0,3", "--j", "1"]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("positive"));
}

#[test]
fn gcd_above_one_exits_two() {
    let r = run(&["gj", "--tuple", "2,4", "--j", "0"]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("gcd"));
}

#[test]
fn oversized_j_exits_two() {
    let r = run(&["gj", "--tuple", "3,5,8", "--j", "100000001"]);
    assert_eq!(r.code, 2);
}

// ---- environment override, via subprocess ----

#[test]
fn hard_limit_override_exits_three() {
    let output = std::process::Command::new(env!("CARGO_BIN_EXE_jfrob"))
        .args(["gj", "--tuple", "3,5,8", "--j", "15"])
        .env("JFROB_HARD_LIMIT", "10")
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(3));
    let err = String::from_utf8(output.stderr).unwrap();
    assert!(err.contains("hard limit 10"), "got: {err}");
}

#[test]
fn invalid_hard_limit_exits_two() {
    let output = std::process::Command::new(env!("CARGO_BIN_EXE_jfrob"))
        .args(["gj", "--tuple", "3,5,8", "--j", "1"])
        .env("JFROB_HARD_LIMIT", "abc")
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(2));
    let err = String::from_utf8(output.stderr).unwrap();
    assert!(err.contains("JFROB_HARD_LIMIT"), "got: {err}");
}

#[test]
fn generous_hard_limit_still_succeeds() {
    let output = std::process::Command::new(env!("CARGO_BIN_EXE_jfrob"))
        .args(["gj", "--tuple", "3,5,8", "--j", "14"])
        .env("JFROB_HARD_LIMIT", "100000")
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(String::from_utf8(output.stdout).unwrap(), "52\n");
}
