use holoweb::web::Web;
use serde_json::Value;
use std::io::Write;
use std::process::{Command, Output};

fn holoweb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_holoweb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn temp_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

const QUADRATIC: &str = "dy^2 + x*dx*dy - y*dx^2";

#[test]
fn validate_reads_web_files() {
    let file = temp_file("web n=2 k=2 vars=x,y\nx*dx*dy + dy^2\n");
    let out = holoweb(&["validate", "--web", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("valid web: n = 2, k = 2"));
}

#[test]
fn format_errors_carry_line_and_column() {
    let file = temp_file("web n=2 k=2 vars=x,y\nx*dx +* dy\n");
    let out = holoweb(&["validate", "--web", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2, column 7"), "{}", stderr(&out));
    assert!(out.stdout.is_empty());
}

#[test]
fn square_factor_is_rejected() {
    let out = holoweb(&["validate", "--web", "(dy - x*dx)^2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("square factor"));
}

#[test]
fn verify_exit_codes() {
    let ok = holoweb(&["verify-fi", "--web", QUADRATIC, "--fi", "z^2 + x*z - y"]);
    assert_eq!(ok.status.code(), Some(0));
    let fi = temp_file("fi k=2 vars=x,y\nf0 = -x\nf1 = 0\n");
    let bad = holoweb(&["verify-fi", "--web", QUADRATIC, "--fi", fi.path().to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1), "{}", stderr(&bad));
    assert!(stdout(&bad).contains("verified: false"));
}

#[test]
fn json_is_deterministic_and_round_trips() {
    let args = ["--json", "validate", "--web", "y*dy^2 - x*dx^2 + dx*dy", "--seed", "7"];
    let a = holoweb(&args);
    let b = holoweb(&args);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["command"], "validate");
    assert_eq!(v["options"]["seed"], 7);
    let form = v["result"]["form"].as_str().unwrap();
    let again = holoweb(&["--json", "validate", "--web", form, "--seed", "7"]);
    let w: Value = serde_json::from_slice(&again.stdout).unwrap();
    assert_eq!(w["result"]["form"], v["result"]["form"]);
    let canonical = Web::from_text(form).unwrap();
    assert_eq!(canonical.form().to_string(), form);
}

#[test]
fn clairaut_report() {
    let out = holoweb(&["clairaut", "--clairaut", "p^2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("envelope: x^2 + 4*y"), "{text}");
    assert!(text.contains("verified: true"));
}

#[test]
fn trace_writes_csv() {
    let out = holoweb(&["trace", "--clairaut", "p^2", "--start", "3,2", "--steps", "5"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x_re,x_im,y_re,y_im,p_re,p_im,residual"));
    let rows: Vec<Vec<f64>> = lines
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 6);
    // leaves of a Clairaut equation have constant slope
    for row in &rows {
        assert!((row[4] - rows[0][4]).abs() < 1e-9);
        assert!(row[6] < 1e-8);
    }
}

#[test]
fn classify_saddle() {
    let out = holoweb(&["--json", "classify", "--web", "x*dy + y*dx", "--point", "0,0,0"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["verdict"], "saddle_with_first_integral_candidate");
    assert_eq!(v["result"]["rational_approx"], serde_json::json!([2, 1]));
}

#[test]
fn missing_required_input_is_a_usage_error() {
    let out = holoweb(&["verify-fi", "--web", QUADRATIC]);
    assert_eq!(out.status.code(), Some(2));
}
