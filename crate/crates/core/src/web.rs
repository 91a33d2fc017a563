//! Codimension-one k-webs as symmetric differential forms.
//!
//! A [`Web`] on `(ℂⁿ, 0)` is stored as a polynomial in the coordinates
//! `x₁..xₙ` and their differentials `dx₁..dxₙ`, homogeneous of degree `k` in
//! the differentials, free of common coefficient factors, and square-free in
//! the differential block. The canonical form is aligned to the variable list
//! `coords ++ diffs` and has graded-lex leading coefficient 1.

use crate::numeric::{polynomial_roots, NumericError};
use crate::poly::{
    coefficients_in_block, content_in_block, gcd, has_square_factor_in, is_unit, line_col, parse_poly,
    scan_identifiers, var_list, GaussianRational, MultiPoly, PolyError, VarList,
};
use num_complex::Complex64;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WebError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("form is identically zero")]
    ZeroForm,
    #[error("form is not homogeneous in the differentials")]
    NotHomogeneous,
    #[error("form has degree {found} in the differentials, expected {expected}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("square factor in the differentials")]
    SquareFactor,
    #[error("common coefficient factor {0} (zero set of codimension one)")]
    CommonFactor(String),
    #[error("webs {0} and {1} share a factor")]
    SharedFactor(usize, usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("no chart found within the search budget of {budget} shears")]
    ChartSearchExhausted { budget: usize },
    #[error("could not find smooth points on the symbol cone after {retries} attempts")]
    DegenerateSymbol { retries: usize },
    #[error("factor {0} is not a 1-form")]
    NotOneForm(usize),
    #[error("plane embedding does not have rank 2")]
    PlaneRank,
    #[error("plane is not transverse to the web: {0}")]
    NonTransversePlane(String),
    #[error("line {line}, column {col}: {message}")]
    Format { line: usize, col: usize, message: String },
    #[error(transparent)]
    Numeric(#[from] NumericError),
}

/// `x, y` in the plane, `x1..xn` otherwise.
pub fn default_coords(n: usize) -> Vec<String> {
    if n == 2 {
        vec!["x".into(), "y".into()]
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

pub fn differential_name(coord: &str) -> String {
    format!("d{coord}")
}

#[derive(Clone, Debug, PartialEq)]
pub struct Web {
    coords: Vec<String>,
    diffs: Vec<String>,
    k: u32,
    form: MultiPoly,
}

/// Validates and canonicalizes `form` as a `k`-web in dimension `n` using the
/// default coordinate names.
pub fn make_web(form: &MultiPoly, n: usize, k: u32) -> Result<Web, WebError> {
    Web::new(form, default_coords(n), k)
}

impl Web {
    pub fn new(form: &MultiPoly, coords: Vec<String>, k: u32) -> Result<Web, WebError> {
        if form.is_zero() {
            return Err(WebError::ZeroForm);
        }
        let diffs: Vec<String> = coords.iter().map(|c| differential_name(c)).collect();
        let vars: VarList = var_list(&coords.iter().chain(&diffs).collect::<Vec<_>>());
        let form = form.align_to(&vars)?;
        match form.homogeneous_degree_in(&diffs) {
            None => return Err(WebError::NotHomogeneous),
            Some(d) if d != k => return Err(WebError::DegreeMismatch { expected: k, found: d }),
            Some(_) => {}
        }
        let content = content_in_block(&form, &diffs);
        if !is_unit(&content) {
            return Err(WebError::CommonFactor(content.trim_vars().to_string()));
        }
        if has_square_factor_in(&form, &diffs) {
            return Err(WebError::SquareFactor);
        }
        Ok(Web {
            coords,
            diffs,
            k,
            form: form.monic(),
        })
    }

    /// Builds a web from a form whose degree is read off the differentials.
    pub fn from_form(form: &MultiPoly, coords: Vec<String>) -> Result<Web, WebError> {
        let diffs: Vec<String> = coords.iter().map(|c| differential_name(c)).collect();
        let k = form.homogeneous_degree_in(&diffs).ok_or(WebError::NotHomogeneous)?;
        Web::new(form, coords, k)
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn form(&self) -> &MultiPoly {
        &self.form
    }

    pub fn coords(&self) -> &[String] {
        &self.coords
    }

    pub fn diffs(&self) -> &[String] {
        &self.diffs
    }

    /// The form with the coordinates renamed positionally to `coords`.
    pub fn renamed(&self, coords: &[String]) -> Result<Web, WebError> {
        if coords.len() != self.n() {
            return Err(WebError::DimensionMismatch {
                expected: self.n(),
                found: coords.len(),
            });
        }
        if coords == self.coords.as_slice() {
            return Ok(self.clone());
        }
        let mut map = HashMap::new();
        for (old, new) in self.coords.iter().zip(coords) {
            map.insert(old.clone(), new.clone());
            map.insert(differential_name(old), differential_name(new));
        }
        Web::new(&self.form.rename(&map), coords.to_vec(), self.k)
    }

    /// The symbol `form(x*, ·)` at an exact base point, as a polynomial in the
    /// differentials.
    pub fn symbol_at(&self, point: &[GaussianRational]) -> MultiPoly {
        let values: HashMap<String, GaussianRational> =
            self.coords.iter().cloned().zip(point.iter().cloned()).collect();
        self.form.substitute(&values).trim_vars()
    }

    /// Text form: a `web` header line followed by the polynomial.
    pub fn to_text(&self) -> String {
        format!(
            "web n={} k={} vars={}\n{}\n",
            self.n(),
            self.k,
            self.coords.join(","),
            self.form
        )
    }

    /// Parses the text form. Input without a `web` header is read as a bare
    /// polynomial whose coordinates are inferred from the differentials used.
    pub fn from_text(text: &str) -> Result<Web, WebError> {
        parse_web_text(text)
    }
}

impl fmt::Display for Web {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.form.fmt(f)
    }
}

fn format_error(text: &str, pos: usize, message: impl Into<String>) -> WebError {
    let (line, col) = line_col(text, pos);
    WebError::Format {
        line,
        col,
        message: message.into(),
    }
}

pub(crate) fn poly_error_at(text: &str, offset: usize, err: PolyError) -> WebError {
    match err {
        PolyError::Syntax { pos, message } => format_error(text, offset + pos, message),
        PolyError::UnknownIdentifier { name, pos } => {
            format_error(text, offset + pos, format!("unknown identifier '{name}'"))
        }
        other => WebError::Poly(other),
    }
}

/// Orders names like `x2 < x10` by comparing trailing digits numerically.
pub(crate) fn natural_sort(names: &mut [String]) {
    fn key(s: &str) -> (String, u64) {
        let digits = s.len() - s.trim_end_matches(|c: char| c.is_ascii_digit()).len();
        let (head, tail) = s.split_at(s.len() - digits);
        (head.to_string(), tail.parse().unwrap_or(0))
    }
    names.sort_by_key(|a| key(a));
}

/// Coordinates inferred from the identifiers of a bare web polynomial.
fn infer_web_coords(ids: &[String]) -> Vec<String> {
    let planar = ["x", "y", "dx", "dy"];
    if ids.iter().all(|i| planar.contains(&i.as_str())) {
        return default_coords(2);
    }
    let mut coords: Vec<String> = Vec::new();
    for id in ids {
        let c = match id.strip_prefix('d') {
            Some(rest) if !rest.is_empty() && ids.iter().any(|o| o == id) => rest.to_string(),
            _ => id.clone(),
        };
        if !coords.contains(&c) {
            coords.push(c);
        }
    }
    natural_sort(&mut coords);
    coords
}

pub(crate) struct Header {
    pub fields: HashMap<String, String>,
}

pub(crate) fn parse_header(text: &str, line: &str, keyword: &str) -> Result<Header, WebError> {
    let mut parts = line.split_whitespace();
    if parts.next() != Some(keyword) {
        return Err(format_error(text, 0, format!("expected '{keyword}' header")));
    }
    let mut fields = HashMap::new();
    for part in parts {
        let Some((k, v)) = part.split_once('=') else {
            let pos = line.find(part).unwrap_or(0);
            return Err(format_error(text, pos, format!("malformed header field '{part}'")));
        };
        fields.insert(k.to_string(), v.to_string());
    }
    Ok(Header { fields })
}

impl Header {
    pub fn usize_field(&self, text: &str, name: &str) -> Result<usize, WebError> {
        let raw = self
            .fields
            .get(name)
            .ok_or_else(|| format_error(text, 0, format!("missing header field '{name}'")))?;
        raw.parse()
            .map_err(|_| format_error(text, 0, format!("header field '{name}' is not a natural number")))
    }

    pub fn vars(&self) -> Option<Vec<String>> {
        self.fields
            .get("vars")
            .map(|v| v.split(',').filter(|s| !s.is_empty()).map(str::to_string).collect())
    }
}

fn parse_web_text(text: &str) -> Result<Web, WebError> {
    let trimmed = text.trim_start();
    let lead = text.len() - trimmed.len();
    if !trimmed.starts_with("web") || trimmed[3..].chars().next().is_some_and(|c| !c.is_whitespace()) {
        let ids = scan_identifiers(text).map_err(|e| poly_error_at(text, 0, e))?;
        let coords = infer_web_coords(&ids);
        let vars = web_vars(&coords);
        let form = parse_poly(text, &vars).map_err(|e| poly_error_at(text, 0, e))?;
        return Web::from_form(&form, coords);
    }
    let header_end = trimmed.find('\n').map_or(text.len(), |i| lead + i);
    let header = parse_header(text, &text[lead..header_end], "web")?;
    let n = header.usize_field(text, "n")?;
    let k = header.usize_field(text, "k")? as u32;
    let coords = header.vars().unwrap_or_else(|| default_coords(n));
    if coords.len() != n {
        return Err(WebError::DimensionMismatch {
            expected: n,
            found: coords.len(),
        });
    }
    let body_start = (header_end + 1).min(text.len());
    let body = &text[body_start..];
    let mut names: Vec<String> = coords
        .iter()
        .cloned()
        .chain(coords.iter().map(|c| differential_name(c)))
        .collect();
    let aliases = n == 2 && coords != default_coords(2);
    if aliases {
        names.extend(["x", "y", "dx", "dy"].map(String::from));
    }
    let form = parse_poly(body, &var_list(&names)).map_err(|e| poly_error_at(text, body_start, e))?;
    let form = if aliases {
        let mut map = HashMap::new();
        for (alias, c) in ["x", "y"].iter().zip(&coords) {
            map.insert(alias.to_string(), c.clone());
            map.insert(differential_name(alias), differential_name(c));
        }
        form.rename(&map)
    } else {
        form
    };
    Web::new(&form, coords, k)
}

pub(crate) fn web_vars(coords: &[String]) -> VarList {
    let names: Vec<String> = coords
        .iter()
        .cloned()
        .chain(coords.iter().map(|c| differential_name(c)))
        .collect();
    var_list(&names)
}

/// Product of the forms of foliations / webs on the same space.
pub fn superpose(webs: &[Web]) -> Result<Web, WebError> {
    let first = webs.first().ok_or(WebError::ZeroForm)?;
    let coords = first.coords.clone();
    let aligned: Vec<Web> = webs.iter().map(|w| w.renamed(&coords)).collect::<Result<_, _>>()?;
    for i in 0..aligned.len() {
        for j in i + 1..aligned.len() {
            let g = gcd(&aligned[i].form, &aligned[j].form);
            if first.diffs.iter().any(|d| g.depends_on(d)) {
                return Err(WebError::SharedFactor(i, j));
            }
        }
    }
    let mut product = MultiPoly::one(first.form.vars().clone());
    let mut k = 0;
    for w in &aligned {
        product = &product * &w.form;
        k += w.k;
    }
    Web::new(&product, coords, k)
}

/// A linear change of coordinates `x_old = M · x_new`, applied to both the
/// coordinates and their differentials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearChange {
    pub matrix: Vec<Vec<i64>>,
}

impl LinearChange {
    pub fn identity(n: usize) -> Self {
        LinearChange {
            matrix: (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.matrix.len())
    }

    pub fn apply(&self, web: &Web) -> Result<Web, WebError> {
        let vars = web.form.vars().clone();
        let mut images = HashMap::new();
        for (i, row) in self.matrix.iter().enumerate() {
            for (names, target) in [(&web.coords, &web.coords[i]), (&web.diffs, &web.diffs[i])] {
                let mut img = MultiPoly::zero(vars.clone());
                for (j, &m) in row.iter().enumerate() {
                    if m != 0 {
                        let v = MultiPoly::var(vars.clone(), &names[j])?;
                        img = &img + &v.scale(&m.into());
                    }
                }
                images.insert(target.clone(), img);
            }
        }
        Web::new(&web.form.compose(&images), web.coords.clone(), web.k)
    }
}

impl fmt::Display for LinearChange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .matrix
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

const SHEAR_ENTRIES: [i64; 7] = [0, 1, -1, 2, -2, 3, -3];

/// Finds a shear `x_i = x_i' + c_i·x_n'` (i < n), entries in −3..3 tried in
/// the fixed order 0, 1, −1, 2, −2, 3, −3, making the coefficient of
/// `dx_n^k` nonzero at the origin.
pub fn adapt_chart(web: &Web) -> Result<(Web, LinearChange), WebError> {
    let n = web.n();
    let origin = vec![GaussianRational::zero(); n];
    let symbol0 = web.symbol_at(&origin);
    let budget = SHEAR_ENTRIES.len().pow((n - 1) as u32);
    for idx in 0..budget {
        let mut shear = vec![0i64; n - 1];
        let mut rest = idx;
        for slot in shear.iter_mut().rev() {
            *slot = SHEAR_ENTRIES[rest % SHEAR_ENTRIES.len()];
            rest /= SHEAR_ENTRIES.len();
        }
        let mut direction: HashMap<String, GaussianRational> = HashMap::new();
        for (i, d) in web.diffs.iter().enumerate() {
            let v = if i + 1 == n { 1 } else { shear[i] };
            direction.insert(d.clone(), v.into());
        }
        let value = symbol0.substitute(&direction);
        if value.is_zero() {
            continue;
        }
        let mut change = LinearChange::identity(n);
        for (i, c) in shear.iter().enumerate() {
            change.matrix[i][n - 1] = *c;
        }
        if change.is_identity() {
            return Ok((web.clone(), change));
        }
        let adapted = change.apply(web)?;
        return Ok((adapted, change));
    }
    Err(WebError::ChartSearchExhausted { budget })
}

const BRILL_BOX: i64 = 5;
const BRILL_RETRIES: usize = 64;

/// Monte-Carlo necessary test for the symbol being a product of linear forms.
///
/// At each sampled base point the cone `{φ = 0}` of the symbol is met along
/// random lines; at each smooth cone point the Hessian of `φ` must vanish on
/// the kernel of the gradient, relative to the Hessian's size, within
/// `tolerance`. A `true` result is evidence, not proof. Planar webs always
/// pass.
pub fn brill_check(web: &Web, samples: usize, tolerance: f64, seed: u64) -> Result<bool, WebError> {
    if web.n() <= 2 || web.k <= 1 {
        return Ok(true);
    }
    let n = web.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let grad_exact: Vec<MultiPoly> = web.diffs.iter().map(|d| web.form.derivative(d)).collect();
    let hess_exact: Vec<Vec<MultiPoly>> = grad_exact
        .iter()
        .map(|g| web.diffs.iter().map(|d| g.derivative(d)).collect())
        .collect();
    let t_vars = var_list(&["t"]);
    let t = MultiPoly::var(t_vars.clone(), "t")?;

    for _ in 0..samples {
        let mut retries = 0;
        let mut checked = false;
        while !checked {
            if retries >= BRILL_RETRIES {
                return Err(WebError::DegenerateSymbol { retries });
            }
            retries += 1;
            let base: Vec<GaussianRational> = (0..n).map(|_| rng.gen_range(-BRILL_BOX..=BRILL_BOX).into()).collect();
            let base_map: HashMap<String, GaussianRational> =
                web.coords.iter().cloned().zip(base.iter().cloned()).collect();
            let symbol = web.form.substitute(&base_map);
            if symbol.is_zero() {
                continue;
            }
            let a: Vec<i64> = (0..n).map(|_| rng.gen_range(-BRILL_BOX..=BRILL_BOX)).collect();
            let b: Vec<i64> = (0..n).map(|_| rng.gen_range(-BRILL_BOX..=BRILL_BOX)).collect();
            let mut line = HashMap::new();
            for (i, d) in web.diffs.iter().enumerate() {
                let img = &MultiPoly::constant(t_vars.clone(), a[i].into()) + &t.scale(&b[i].into());
                line.insert(d.clone(), img);
            }
            let restricted = symbol.compose(&line);
            let restricted = restricted.align_to(&t_vars)?;
            if restricted.degree_in("t").unwrap_or(0) == 0 {
                continue;
            }
            let coeffs: Vec<Complex64> = restricted
                .coeffs_in("t")
                .iter()
                .map(|c| c.as_constant().unwrap_or_default().to_complex())
                .collect();
            let roots = polynomial_roots(&coeffs, crate::numeric::roots::DEFAULT_MAX_ITERATIONS)?;
            let grad_at: Vec<MultiPoly> = grad_exact.iter().map(|g| g.substitute(&base_map)).collect();
            let hess_at: Vec<Vec<MultiPoly>> = hess_exact
                .iter()
                .map(|row| row.iter().map(|h| h.substitute(&base_map)).collect())
                .collect();
            for root in roots {
                let values: HashMap<String, Complex64> = web
                    .diffs
                    .iter()
                    .enumerate()
                    .map(|(i, d)| (d.clone(), Complex64::new(a[i] as f64, 0.0) + root * b[i] as f64))
                    .collect();
                let g: Vec<Complex64> = grad_at
                    .iter()
                    .map(|p| p.eval_complex(&values))
                    .collect::<Result<_, _>>()?;
                let h: Vec<Vec<Complex64>> = hess_at
                    .iter()
                    .map(|row| row.iter().map(|p| p.eval_complex(&values)).collect())
                    .collect::<Result<_, _>>()?;
                let gscale = g.iter().map(|z| z.norm()).fold(0.0, f64::max);
                let vscale = values.values().map(|z| z.norm()).fold(1.0, f64::max);
                let hscale = h.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max);
                // smooth point of the cone: gradient well away from zero
                if gscale <= 1e-8 * hscale.max(1.0) * vscale {
                    continue;
                }
                checked = true;
                if hscale == 0.0 {
                    continue;
                }
                let m = (0..n)
                    .max_by(|&i, &j| g[i].norm().partial_cmp(&g[j].norm()).unwrap())
                    .unwrap();
                let basis: Vec<Vec<Complex64>> = (0..n)
                    .filter(|&j| j != m)
                    .map(|j| {
                        let mut w = vec![Complex64::new(0.0, 0.0); n];
                        w[j] = Complex64::new(1.0, 0.0);
                        w[m] = -g[j] / g[m];
                        w
                    })
                    .collect();
                for u in &basis {
                    for w in &basis {
                        let mut q = Complex64::new(0.0, 0.0);
                        for i in 0..n {
                            for j in 0..n {
                                q += u[i] * h[i][j] * w[j];
                            }
                        }
                        if q.norm() > tolerance * hscale {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Checks `θ ∧ dθ = 0` exactly for each 1-form factor `θ = Σ a_j dx_j`.
pub fn frobenius_check_decomposable(factors: &[MultiPoly], coords: &[String]) -> Result<bool, WebError> {
    let diffs: Vec<String> = coords.iter().map(|c| differential_name(c)).collect();
    for (idx, theta) in factors.iter().enumerate() {
        if theta.is_zero() || theta.homogeneous_degree_in(&diffs) != Some(1) {
            return Err(WebError::NotOneForm(idx));
        }
        let blocks = coefficients_in_block(theta, &diffs);
        let n = coords.len();
        let a: Vec<MultiPoly> = (0..n)
            .map(|j| {
                let mut key = vec![0u32; n];
                key[j] = 1;
                blocks
                    .get(&key)
                    .cloned()
                    .unwrap_or_else(|| MultiPoly::zero(theta.vars().clone()))
            })
            .collect();
        let curl = |i: usize, j: usize| &a[j].derivative(&coords[i]) - &a[i].derivative(&coords[j]);
        for i in 0..n {
            for j in i + 1..n {
                for l in j + 1..n {
                    let c = &(&(&a[i] * &curl(j, l)) - &(&a[j] * &curl(i, l))) + &(&a[l] * &curl(i, j));
                    if !c.is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Linear embedding `ℂ² → ℂⁿ`, `(u, v) ↦ A·(u, v)`, through the origin.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneEmbedding {
    rows: Vec<[GaussianRational; 2]>,
}

impl PlaneEmbedding {
    pub fn new(rows: Vec<[GaussianRational; 2]>) -> Result<Self, WebError> {
        let full_rank = (0..rows.len()).any(|i| {
            (i + 1..rows.len()).any(|j| {
                let minor = &(&rows[i][0] * &rows[j][1]) - &(&rows[i][1] * &rows[j][0]);
                !minor.is_zero()
            })
        });
        if !full_rank {
            return Err(WebError::PlaneRank);
        }
        Ok(Self { rows })
    }

    /// Row-major integer entries `a11,a12,a21,a22,…`.
    pub fn from_integers(entries: &[i64]) -> Result<Self, WebError> {
        if !entries.len().is_multiple_of(2) || entries.is_empty() {
            return Err(WebError::PlaneRank);
        }
        Self::new(entries.chunks(2).map(|c| [c[0].into(), c[1].into()]).collect())
    }

    pub fn rows(&self) -> &[[GaussianRational; 2]] {
        &self.rows
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Images of `coords` (and, when given, `diffs`) in terms of the plane
    /// coordinates `x, y` (and `dx, dy`).
    pub(crate) fn images(&self, coords: &[String], diffs: Option<&[String]>) -> HashMap<String, MultiPoly> {
        let plane = default_coords(2);
        let plane_vars = web_vars(&plane);
        let mut out = HashMap::new();
        let lin = |row: &[GaussianRational; 2], a: &str, b: &str| {
            let u = MultiPoly::var(plane_vars.clone(), a).unwrap();
            let v = MultiPoly::var(plane_vars.clone(), b).unwrap();
            &u.scale(&row[0]) + &v.scale(&row[1])
        };
        for (i, c) in coords.iter().enumerate() {
            out.insert(c.clone(), lin(&self.rows[i], "x", "y"));
        }
        if let Some(diffs) = diffs {
            for (i, d) in diffs.iter().enumerate() {
                out.insert(d.clone(), lin(&self.rows[i], "dx", "dy"));
            }
        }
        out
    }

    /// The conjugate embedding, acting on `x_bar` coordinates.
    pub fn conjugate(&self) -> PlaneEmbedding {
        PlaneEmbedding {
            rows: self.rows.iter().map(|r| [r[0].conj(), r[1].conj()]).collect(),
        }
    }
}

/// Pulls the web back along a plane embedding, giving a planar web in `x, y`.
pub fn restrict_to_plane(web: &Web, plane: &PlaneEmbedding) -> Result<Web, WebError> {
    if plane.dim() != web.n() {
        return Err(WebError::DimensionMismatch {
            expected: web.n(),
            found: plane.dim(),
        });
    }
    let images = plane.images(&web.coords, Some(&web.diffs));
    let pulled = web.form.compose(&images);
    if pulled.is_zero() {
        return Err(WebError::NonTransversePlane("pullback vanishes identically".into()));
    }
    Web::new(&pulled, default_coords(2), web.k).map_err(|e| match e {
        WebError::DegreeMismatch { .. } | WebError::NotHomogeneous => {
            WebError::NonTransversePlane("degree drop".into())
        }
        WebError::SquareFactor => WebError::NonTransversePlane("square factor in pullback".into()),
        WebError::CommonFactor(c) => WebError::NonTransversePlane(format!("common factor {c} in pullback")),
        other => other,
    })
}
