//! Command-line front end. `run` parses arguments and returns the exit code
//! with the text written to standard output and standard error, so the
//! binary stays a thin wrapper.

use crate::clairaut::{
    clairaut_alpha_restriction, clairaut_criminant, clairaut_first_integral, clairaut_ode, clairaut_web,
    ClairautEquation,
};
use crate::contact::{criminant_ideal, discriminant_curve, fiber_points, lifted_field, to_implicit_ode, ImplicitOde};
use crate::elimination::{
    char_poly_annihilates, char_poly_of_function, leviflat_from_first_integral, verify_first_integral, FirstIntegral,
    Verification,
};
use crate::numeric::{classify_singularity, leaf_in_leviflat, trace_leaf, TraceOptions};
use crate::poly::{GaussianRational, MultiPoly};
use crate::web::{adapt_chart, brill_check, restrict_to_plane, PlaneEmbedding, Web, WebError};
use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde_json::{json, Map, Value};
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::Path;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "holoweb",
    version,
    about = "Webs, first integrals and Levi-flat hypersurfaces"
)]
pub struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check and canonicalize a web.
    Validate(ValidateArgs),
    /// Lift a planar web to its implicit ODE, criminant and lifted field.
    Lift(WebArgs),
    /// Discriminant curve of a planar web.
    Discriminant(WebArgs),
    /// Check that a polynomial family is a first integral of a web.
    VerifyFi(VerifyArgs),
    /// Levi-flat defining polynomial of a first integral.
    Leviflat(LeviflatArgs),
    /// Characteristic polynomial of a function on the contact surface.
    Charpoly(CharpolyArgs),
    /// Full report for a Clairaut equation y = x p + f(p).
    Clairaut(ClairautArgs),
    /// Trace a leaf of the lifted field (CSV on standard output).
    Trace(TraceArgs),
    /// Classify a singular point of the lifted field.
    Classify(ClassifyArgs),
}

#[derive(Args, Debug)]
struct WebArgs {
    /// Web file or inline polynomial.
    #[arg(long)]
    web: String,
}

#[derive(Args, Debug)]
struct ValidateArgs {
    #[arg(long)]
    web: String,
    /// Plane embedding, row-major comma-separated entries of an n×2 matrix.
    #[arg(long)]
    plane: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 20)]
    samples: usize,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    web: String,
    /// First-integral file or inline polynomial in z.
    #[arg(long)]
    fi: String,
}

#[derive(Args, Debug)]
struct LeviflatArgs {
    #[arg(long)]
    fi: String,
    #[arg(long)]
    plane: Option<String>,
    /// Record the user's assertion that the web has finitely many invariant
    /// analytic subvarieties through the origin.
    #[arg(long)]
    assume_finite_invariant: bool,
}

#[derive(Args, Debug)]
struct CharpolyArgs {
    #[arg(long, conflicts_with = "clairaut", required_unless_present = "clairaut")]
    web: Option<String>,
    #[arg(long)]
    clairaut: Option<String>,
    /// Function of x, y, p.
    #[arg(long, default_value = "p")]
    function: String,
}

#[derive(Args, Debug)]
struct ClairautArgs {
    /// The polynomial f(p).
    #[arg(long)]
    clairaut: String,
}

#[derive(Args, Debug)]
struct OdeSource {
    #[arg(long, conflicts_with = "clairaut", required_unless_present = "clairaut")]
    web: Option<String>,
    #[arg(long)]
    clairaut: Option<String>,
}

#[derive(Args, Debug)]
struct TraceArgs {
    #[command(flatten)]
    source: OdeSource,
    /// Base point `x,y` (complex numbers such as `1`, `0.5-2i`).
    #[arg(long)]
    start: String,
    /// Index of the fiber point to start on, in order of real then imaginary part.
    #[arg(long, default_value_t = 0)]
    sheet: usize,
    #[arg(long, default_value_t = 1e-3)]
    step: f64,
    #[arg(long, default_value_t = 10_000)]
    steps: usize,
    #[arg(long, default_value_t = 0.0)]
    theta: f64,
    /// First integral whose Levi-flat polynomial is evaluated along the trace.
    #[arg(long)]
    fi: Option<String>,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[command(flatten)]
    source: OdeSource,
    /// Point `x,y,p` on the surface.
    #[arg(long)]
    point: String,
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    #[arg(long, default_value_t = 50)]
    max_denominator: u64,
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    command: &'static str,
    options: Map<String, Value>,
    result: Value,
    diagnostics: Vec<String>,
    text: String,
    code: i32,
}

impl Report {
    fn new(command: &'static str) -> Self {
        Self {
            command,
            options: Map::new(),
            result: Value::Null,
            diagnostics: Vec::new(),
            text: String::new(),
            code: EXIT_OK,
        }
    }

    fn option(&mut self, key: &str, value: impl Into<Value>) {
        self.options.insert(key.to_string(), value.into());
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn json(&self) -> String {
        let v = json!({
            "command": self.command,
            "options": self.options,
            "result": self.result,
            "diagnostics": self.diagnostics,
        });
        let mut s = serde_json::to_string_pretty(&v).expect("serializable report");
        s.push('\n');
        s
    }
}

struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type CmdResult = Result<(), InputError>;

/// A path when it names an existing file, otherwise inline text.
fn read_input(arg: &str) -> Result<String, InputError> {
    let path = Path::new(arg);
    if path.is_file() {
        std::fs::read_to_string(path).map_err(|e| InputError(format!("{arg}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

fn load_web(arg: &str) -> Result<Web, InputError> {
    let text = read_input(arg)?;
    Web::from_text(&text).map_err(|e| InputError(format!("web: {e}")))
}

fn load_fi(arg: &str) -> Result<FirstIntegral, InputError> {
    let text = read_input(arg)?;
    FirstIntegral::from_text(&text).map_err(|e| InputError(format!("first integral: {e}")))
}

fn load_clairaut(arg: &str) -> Result<ClairautEquation, InputError> {
    let text = read_input(arg)?;
    ClairautEquation::parse(text.trim()).map_err(|e| InputError(format!("clairaut: {e}")))
}

fn parse_complex(s: &str) -> Result<Complex64, InputError> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    t.parse::<Complex64>()
        .map_err(|_| InputError(format!("not a complex number: '{s}'")))
}

fn parse_complex_list(s: &str, expected: usize) -> Result<Vec<Complex64>, InputError> {
    let parts: Vec<Complex64> = s.split(',').map(parse_complex).collect::<Result<_, _>>()?;
    if parts.len() != expected {
        return Err(InputError(format!(
            "expected {expected} comma-separated values, got {}",
            parts.len()
        )));
    }
    Ok(parts)
}

fn parse_plane(s: &str) -> Result<PlaneEmbedding, InputError> {
    let entries: Vec<GaussianRational> = s
        .split(',')
        .map(|e| {
            MultiPoly::parse::<&str>(e.trim(), &[])
                .ok()
                .and_then(|p| p.as_constant())
                .ok_or_else(|| InputError(format!("bad plane entry '{e}'")))
        })
        .collect::<Result<_, _>>()?;
    if !entries.len().is_multiple_of(2) || entries.is_empty() {
        return Err(InputError("plane needs an even number of entries (n rows of 2)".into()));
    }
    let rows = entries.chunks(2).map(|c| [c[0].clone(), c[1].clone()]).collect();
    Ok(PlaneEmbedding::new(rows)?)
}

fn complex_json(z: Complex64) -> Value {
    json!([z.re, z.im])
}

fn fmt_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else {
        format!("{}{:+}i", z.re, z.im)
    }
}

/// Lifts a planar web, shearing the chart first when the `dy^k` coefficient
/// vanishes at the origin.
fn lift_web(web: &Web, report: &mut Report) -> Result<ImplicitOde, InputError> {
    if web.n() != 2 {
        return Err(InputError(format!("web must be planar, got n = {}", web.n())));
    }
    let web = match adapt_chart(web) {
        Ok((adapted, change)) => {
            if !change.is_identity() {
                report
                    .diagnostics
                    .push(format!("chart changed by x_old = M x_new with M = {change}"));
            }
            adapted
        }
        Err(WebError::ChartSearchExhausted { budget }) => {
            report.diagnostics.push(format!(
                "no shear within budget {budget} makes dy^k nonvanishing at the origin; using the given chart"
            ));
            web.clone()
        }
        Err(e) => return Err(e.into()),
    };
    Ok(to_implicit_ode(&web)?)
}

fn ode_from_source(source: &OdeSource, report: &mut Report) -> Result<ImplicitOde, InputError> {
    match (&source.web, &source.clairaut) {
        (Some(w), _) => {
            report.option("web", w.as_str());
            lift_web(&load_web(w)?, report)
        }
        (None, Some(f)) => {
            report.option("clairaut", f.as_str());
            Ok(clairaut_ode(&load_clairaut(f)?))
        }
        (None, None) => Err(InputError("one of --web or --clairaut is required".into())),
    }
}

fn cmd_validate(a: &ValidateArgs, r: &mut Report) -> CmdResult {
    r.option("web", a.web.as_str());
    r.option("seed", a.seed);
    r.option("samples", a.samples);
    r.option("tol", a.tol);
    r.option("plane", a.plane.clone());
    let web = load_web(&a.web)?;
    let brill = brill_check(&web, a.samples, a.tol, a.seed)?;
    let mut result = json!({
        "n": web.n(),
        "k": web.k(),
        "coords": web.coords(),
        "form": web.form().to_string(),
        "brill": brill,
    });
    r.line(format!("valid web: n = {}, k = {}", web.n(), web.k()));
    r.line(format!("form: {}", web.form()));
    r.line(format!("brill: {brill}"));
    if web.n() >= 3 {
        r.diagnostics
            .push("integrability of non-decomposable factors is not checked".into());
    }
    match adapt_chart(&web) {
        Ok((_, change)) => {
            result["chart_change"] = json!(change.matrix);
            r.line(format!("chart change: {change}"));
        }
        Err(e) => r.diagnostics.push(e.to_string()),
    }
    if let Some(plane) = &a.plane {
        let restricted = restrict_to_plane(&web, &parse_plane(plane)?)?;
        result["restricted"] = json!(restricted.form().to_string());
        r.line(format!("restricted: {}", restricted.form()));
    }
    r.result = result;
    if !brill {
        r.code = EXIT_FALSE;
    }
    Ok(())
}

fn cmd_lift(a: &WebArgs, r: &mut Report) -> CmdResult {
    r.option("web", a.web.as_str());
    let ode = lift_web(&load_web(&a.web)?, r)?;
    let (f, fp) = criminant_ideal(&ode);
    let v = lifted_field(&ode);
    r.result = json!({
        "F": f.to_string(),
        "k": ode.k(),
        "criminant": [f.to_string(), fp.to_string()],
        "field": [v.vx.to_string(), v.vy.to_string(), v.vp.to_string()],
    });
    r.line(format!("F = {f}"));
    r.line(format!("k = {}", ode.k()));
    r.line(format!("criminant: F = 0, {fp} = 0"));
    r.line(format!("field: ({}, {}, {})", v.vx, v.vy, v.vp));
    Ok(())
}

fn cmd_discriminant(a: &WebArgs, r: &mut Report) -> CmdResult {
    r.option("web", a.web.as_str());
    let ode = lift_web(&load_web(&a.web)?, r)?;
    let d = discriminant_curve(&ode)?;
    r.result = json!({ "discriminant": d.to_string(), "empty": d.is_constant() });
    r.line(format!("discriminant: {d}"));
    if d.is_constant() {
        r.diagnostics.push("discriminant is empty".into());
    }
    Ok(())
}

fn cmd_verify(a: &VerifyArgs, r: &mut Report) -> CmdResult {
    r.option("web", a.web.as_str());
    r.option("fi", a.fi.as_str());
    let web = load_web(&a.web)?;
    let fi = load_fi(&a.fi)?;
    let outcome = verify_first_integral(&web, &fi)?;
    let reason = match &outcome {
        Verification::Verified => Value::Null,
        Verification::DegreeMismatch { web, first_integral } => {
            json!(format!(
                "degree mismatch: web has k = {web}, first integral gives {first_integral}"
            ))
        }
        Verification::FormMismatch => json!("eliminated form differs from the web"),
    };
    r.line(format!("verified: {}", outcome.holds()));
    if let Value::String(s) = &reason {
        r.line(s);
    }
    r.result = json!({ "verified": outcome.holds(), "reason": reason });
    if !outcome.holds() {
        r.code = EXIT_FALSE;
    }
    Ok(())
}

fn cmd_leviflat(a: &LeviflatArgs, r: &mut Report) -> CmdResult {
    r.option("fi", a.fi.as_str());
    r.option("plane", a.plane.clone());
    r.option("assume_finite_invariant", a.assume_finite_invariant);
    let mut fi = load_fi(&a.fi)?;
    if let Some(plane) = &a.plane {
        fi = fi.restrict(&parse_plane(plane)?)?;
    }
    let levi = leviflat_from_first_integral(&fi)?;
    r.result = json!({ "leviflat": levi.to_string(), "k": fi.k() });
    r.line(format!("F = {levi}"));
    r.diagnostics.push(if a.assume_finite_invariant {
        "user assertion: finitely many invariant analytic subvarieties through the origin (not computed)".into()
    } else {
        "finiteness of invariant subvarieties is neither asserted nor computed".into()
    });
    Ok(())
}

fn cmd_charpoly(a: &CharpolyArgs, r: &mut Report) -> CmdResult {
    r.option("function", a.function.as_str());
    let source = OdeSource {
        web: a.web.clone(),
        clairaut: a.clairaut.clone(),
    };
    let ode = ode_from_source(&source, r)?;
    let g = MultiPoly::parse(&a.function, &["x", "y", "p"])?;
    let cp = char_poly_of_function(&ode, &g)?;
    let annihilates = char_poly_annihilates(&ode, &g, &cp)?;
    if cp.degenerate {
        r.diagnostics
            .push("the function does not separate the sheets: repeated factor in z".into());
    }
    r.result = json!({
        "charpoly": cp.poly.to_string(),
        "degenerate": cp.degenerate,
        "annihilates": annihilates,
    });
    r.line(format!("P = {}", cp.poly));
    r.line(format!("annihilates: {annihilates}"));
    if !annihilates {
        r.code = EXIT_FALSE;
    }
    Ok(())
}

fn cmd_clairaut(a: &ClairautArgs, r: &mut Report) -> CmdResult {
    r.option("clairaut", a.clairaut.as_str());
    let eq = load_clairaut(&a.clairaut)?;
    let ode = clairaut_ode(&eq);
    let web = clairaut_web(&eq)?;
    let fi = clairaut_first_integral(&eq);
    let (c0, c1) = clairaut_criminant(&eq);
    let alpha = clairaut_alpha_restriction(&eq)?;
    let envelope = discriminant_curve(&ode)?;
    let verified = verify_first_integral(&web, &fi)?.holds();
    r.result = json!({
        "f": eq.f().to_string(),
        "ode": ode.f().to_string(),
        "web": web.form().to_string(),
        "first_integral": fi.poly().to_string(),
        "criminant": [c0.to_string(), c1.to_string()],
        "alpha_restriction": alpha.to_string(),
        "envelope": envelope.to_string(),
        "verified": verified,
    });
    r.line(format!("F = {}", ode.f()));
    r.line(format!("web: {}", web.form()));
    r.line(format!("first integral: {}", fi.poly()));
    r.line(format!("criminant: {c0} = 0, {c1} = 0"));
    r.line(format!("alpha|S = ({alpha}) dp"));
    r.line(format!("envelope: {envelope}"));
    r.line(format!("verified: {verified}"));
    if !verified {
        r.code = EXIT_FALSE;
    }
    Ok(())
}

fn cmd_trace(a: &TraceArgs, r: &mut Report) -> CmdResult {
    r.option("start", a.start.as_str());
    r.option("sheet", a.sheet);
    r.option("step", a.step);
    r.option("steps", a.steps);
    r.option("theta", a.theta);
    r.option("fi", a.fi.clone());
    r.option("tol", a.tol);
    let ode = ode_from_source(&a.source, r)?;
    let base = parse_complex_list(&a.start, 2)?;
    let fiber = fiber_points(&ode, base[0], base[1], 1e-12)?;
    let mut sheets: Vec<Complex64> = fiber.roots.iter().map(|(z, _)| *z).collect();
    sheets.sort_by(|u, v| u.re.total_cmp(&v.re).then(u.im.total_cmp(&v.im)));
    let p0 = *sheets
        .get(a.sheet)
        .ok_or_else(|| InputError(format!("sheet {} out of range: {} sheets", a.sheet, sheets.len())))?;
    let options = TraceOptions {
        step: a.step,
        steps: a.steps,
        theta: a.theta,
        ..TraceOptions::default()
    };
    let trace = trace_leaf(&ode, [base[0], base[1], p0], &options)?;
    let mut result = json!({
        "points": trace.points.iter().map(|p| json!([p[0].re, p[0].im, p[1].re, p[1].im, p[2].re, p[2].im])).collect::<Vec<_>>(),
        "residual_max": trace.residual_max,
    });
    r.text = trace.to_csv();
    if let Some(fi_arg) = &a.fi {
        let levi = leviflat_from_first_integral(&load_fi(fi_arg)?)?;
        let report = leaf_in_leviflat(&trace, &levi, a.tol)?;
        result["leviflat_residual"] = json!(report.max_residual);
        result["leviflat_passed"] = json!(report.passed);
        r.diagnostics.push(format!(
            "leviflat residual {:e} ({}; the start leaf is assumed to have a real parameter)",
            report.max_residual,
            if report.passed { "pass" } else { "fail" }
        ));
        if !report.passed {
            r.code = EXIT_FALSE;
        }
    }
    r.result = result;
    Ok(())
}

fn cmd_classify(a: &ClassifyArgs, r: &mut Report) -> CmdResult {
    r.option("point", a.point.as_str());
    r.option("tol", a.tol);
    r.option("max_denominator", a.max_denominator);
    let ode = ode_from_source(&a.source, r)?;
    let pt = parse_complex_list(&a.point, 3)?;
    let rep = classify_singularity(&ode, [pt[0], pt[1], pt[2]], a.tol, a.max_denominator)?;
    r.result = json!({
        "location": rep.location.iter().map(|z| complex_json(*z)).collect::<Vec<_>>(),
        "chart": rep.chart,
        "eigenvalues": rep.eigenvalues.iter().map(|z| complex_json(*z)).collect::<Vec<_>>(),
        "ratio": rep.ratio.map(complex_json),
        "verdict": rep.verdict,
        "rational_approx": rep.rational_approx,
    });
    r.line(format!("chart: ({}, {})", rep.chart[0], rep.chart[1]));
    r.line(format!(
        "eigenvalues: {}, {}",
        fmt_complex(rep.eigenvalues[0]),
        fmt_complex(rep.eigenvalues[1])
    ));
    if let Some(ratio) = rep.ratio {
        r.line(format!("ratio: {}", fmt_complex(ratio)));
    }
    if let Some((p, q)) = rep.rational_approx {
        r.line(format!("rational approximation: -{p}/{q}"));
    }
    r.line(format!("verdict: {}", rep.verdict));
    Ok(())
}

/// Runs one invocation with the given arguments (program name first).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let (name, result, mut report) = match &cli.command {
        Command::Validate(a) => dispatch("validate", |r| cmd_validate(a, r)),
        Command::Lift(a) => dispatch("lift", |r| cmd_lift(a, r)),
        Command::Discriminant(a) => dispatch("discriminant", |r| cmd_discriminant(a, r)),
        Command::VerifyFi(a) => dispatch("verify-fi", |r| cmd_verify(a, r)),
        Command::Leviflat(a) => dispatch("leviflat", |r| cmd_leviflat(a, r)),
        Command::Charpoly(a) => dispatch("charpoly", |r| cmd_charpoly(a, r)),
        Command::Clairaut(a) => dispatch("clairaut", |r| cmd_clairaut(a, r)),
        Command::Trace(a) => dispatch("trace", |r| cmd_trace(a, r)),
        Command::Classify(a) => dispatch("classify", |r| cmd_classify(a, r)),
    };
    let mut stderr = String::new();
    if let Err(InputError(msg)) = result {
        report.code = EXIT_INPUT;
        report.result = Value::Null;
        report.diagnostics.push(format!("error: {msg}"));
        let _ = writeln!(stderr, "{name}: error: {msg}");
        report.text.clear();
    }
    let stdout = if cli.json {
        report.json()
    } else {
        let mut text = report.text.clone();
        for d in &report.diagnostics {
            if !d.starts_with("error: ") {
                let _ = writeln!(stderr, "note: {d}");
            }
        }
        if text.is_empty() && report.code != EXIT_INPUT {
            text.push('\n');
        }
        text
    };
    Outcome {
        code: report.code,
        stdout,
        stderr,
    }
}

fn dispatch(name: &'static str, f: impl FnOnce(&mut Report) -> CmdResult) -> (&'static str, CmdResult, Report) {
    let mut report = Report::new(name);
    let result = f(&mut report);
    (name, result, report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("holoweb").chain(args.iter().copied()))
    }

    #[test]
    fn square_factor_is_an_input_error() {
        let out = run_args(&["validate", "--web", "(dy-dx)^2"]);
        assert_eq!(out.code, EXIT_INPUT);
        assert!(out.stderr.contains("square factor"), "{}", out.stderr);
    }

    #[test]
    fn verify_inline() {
        let out = run_args(&["verify-fi", "--web", "dy^2 + x*dx*dy - y*dx^2", "--fi", "z^2 + x*z - y"]);
        assert_eq!(out.code, EXIT_OK);
        assert!(out.stdout.contains("verified: true"));
        let out = run_args(&["verify-fi", "--web", "dx*dy", "--fi", "z - x"]);
        assert_eq!(out.code, EXIT_FALSE);
    }

    #[test]
    fn json_shape() {
        let out = run_args(&["--json", "leviflat", "--fi", "z - x"]);
        assert_eq!(out.code, EXIT_OK);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        for key in ["command", "options", "result", "diagnostics"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        assert_eq!(v["command"], "leviflat");
    }

    #[test]
    fn complex_arguments() {
        assert_eq!(parse_complex("0.5-2i").ok(), Some(Complex64::new(0.5, -2.0)));
        assert_eq!(parse_complex(" -i ").ok(), Some(Complex64::new(0.0, -1.0)));
        assert!(parse_complex_list("1,2", 3).is_err());
    }
}
