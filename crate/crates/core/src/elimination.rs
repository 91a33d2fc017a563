//! First integrals: webs from monic polynomial families, round-trip
//! verification, characteristic polynomials of functions on the contact
//! surface, and Levi-flat defining polynomials.

use crate::contact::{chart_vars, ImplicitOde};
use crate::numeric::NumericError;
use crate::poly::{
    bar_name, bar_pairing, conj_swap, content_in_block, differential, gcd, is_unit, parse_poly, pseudo_remainder,
    resultant_any, scan_identifiers, square_free_in_block, var_list, GaussianRational, HermitianPoly, MultiPoly,
    PolyError, VarList,
};
use crate::web::{
    default_coords, differential_name, natural_sort, parse_header, poly_error_at, PlaneEmbedding, Web, WebError,
};
use num_complex::Complex64;
use num_traits::Zero;
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EliminationError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Web(#[from] WebError),
    #[error("leading coefficient in {param} is not constant: {coeff}")]
    NotMonic { param: String, coeff: String },
    #[error("family has degree 0 in {0}")]
    Constant(String),
    #[error("family has a repeated factor in {0}")]
    NotSquareFree(String),
    #[error("resultant vanishes identically")]
    ZeroResultant,
    #[error("eliminated form has degree {found} in the differentials, expected {expected}")]
    DegenerateDegree { expected: u32, found: u32 },
    #[error("leading coefficient in z is not a unit: {0}")]
    NonUnitLeading(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("line {line}, column {col}: {message}")]
    Format { line: usize, col: usize, message: String },
}

fn lift_format(err: WebError) -> EliminationError {
    match err {
        WebError::Format { line, col, message } => EliminationError::Format { line, col, message },
        WebError::Poly(p) => EliminationError::Poly(p),
        other => EliminationError::Web(other),
    }
}

/// Parameter name for coordinates `coords`: `z`, or the first of `s, t, w`
/// not already taken.
pub fn parameter_name(coords: &[String]) -> String {
    ["z", "s", "t", "w"]
        .iter()
        .find(|c| !coords.iter().any(|x| x == *c))
        .map(|s| s.to_string())
        .unwrap_or_else(|| "z_".into())
}

/// A monic family `P(z) = f₀ + f₁ z + … + z^k`, square-free in `z`.
#[derive(Clone, Debug, PartialEq)]
pub struct FirstIntegral {
    coords: Vec<String>,
    param: String,
    poly: MultiPoly,
    k: u32,
}

impl FirstIntegral {
    /// `poly` is over the coordinates and the parameter. A constant leading
    /// coefficient is divided out.
    pub fn new(poly: &MultiPoly, coords: Vec<String>) -> Result<Self, EliminationError> {
        let param = parameter_name(&coords);
        let names: Vec<String> = coords.iter().cloned().chain([param.clone()]).collect();
        let poly = poly.align_to(&var_list(&names))?;
        let k = match poly.degree_in(&param) {
            None | Some(0) => return Err(EliminationError::Constant(param)),
            Some(k) => k,
        };
        let lc = poly.leading_coeff_in(&param);
        let Some(lc) = lc.as_constant() else {
            return Err(EliminationError::NotMonic {
                param,
                coeff: lc.trim_vars().to_string(),
            });
        };
        let poly = poly.scale(&lc.inv());
        if gcd(&poly, &poly.derivative(&param)).depends_on(&param) {
            return Err(EliminationError::NotSquareFree(param));
        }
        Ok(Self { coords, param, poly, k })
    }

    /// Builds `f₀ + f₁ z + … + f_{k−1} z^{k−1} + z^k` from coefficients over
    /// `coords`.
    pub fn from_coeffs(coeffs: &[MultiPoly], coords: Vec<String>) -> Result<Self, EliminationError> {
        let param = parameter_name(&coords);
        let names: Vec<String> = coords.iter().cloned().chain([param.clone()]).collect();
        let vars = var_list(&names);
        let mut all: Vec<MultiPoly> = coeffs.iter().map(|c| c.align_to(&vars)).collect::<Result<_, _>>()?;
        all.push(MultiPoly::one(vars.clone()));
        let poly = MultiPoly::from_coeffs_in(&vars, &param, &all)?;
        Self::new(&poly, coords)
    }

    pub fn parse(text: &str, coords: &[&str]) -> Result<Self, EliminationError> {
        let coords: Vec<String> = coords.iter().map(|s| s.to_string()).collect();
        let param = parameter_name(&coords);
        let names: Vec<String> = coords.iter().cloned().chain([param]).collect();
        Self::new(&MultiPoly::parse(text, &names)?, coords)
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[String] {
        &self.coords
    }

    pub fn param(&self) -> &str {
        &self.param
    }

    /// `f₀, …, f_{k−1}` over the coordinates.
    pub fn coeffs(&self) -> Vec<MultiPoly> {
        let vars = var_list(&self.coords);
        let mut c = self.poly.coeffs_in(&self.param);
        c.truncate(self.k as usize);
        c.into_iter()
            .map(|p| {
                p.trim_vars()
                    .align_to(&vars)
                    .expect("coefficients free of the parameter")
            })
            .collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("fi k={} vars={}\n", self.k, self.coords.join(","));
        for (j, c) in self.coeffs().iter().enumerate() {
            out.push_str(&format!("f{j} = {c}\n"));
        }
        out
    }

    /// Parses the `fi` text form, or a bare polynomial in `z` whose other
    /// identifiers are the coordinates.
    pub fn from_text(text: &str) -> Result<Self, EliminationError> {
        let trimmed = text.trim_start();
        if !trimmed.starts_with("fi") || trimmed[2..].chars().next().is_some_and(|c| !c.is_whitespace()) {
            let ids = scan_identifiers(text).map_err(|e| lift_format(poly_error_at(text, 0, e)))?;
            let mut coords: Vec<String> = ids.into_iter().filter(|i| i != "z").collect();
            if coords.iter().all(|c| c == "x" || c == "y") {
                coords = default_coords(2);
            } else {
                natural_sort(&mut coords);
            }
            let names: Vec<String> = coords.iter().cloned().chain(["z".to_string()]).collect();
            let poly = parse_poly(text, &var_list(&names)).map_err(|e| lift_format(poly_error_at(text, 0, e)))?;
            return Self::new(&poly, coords);
        }
        let lead = text.len() - trimmed.len();
        let header_end = trimmed.find('\n').map_or(text.len(), |i| lead + i);
        let header = parse_header(text, &text[lead..header_end], "fi").map_err(lift_format)?;
        let k = header.usize_field(text, "k").map_err(lift_format)?;
        let coords = header.vars().unwrap_or_else(|| default_coords(2));
        let vars = var_list(&coords);
        let mut coeffs: Vec<Option<MultiPoly>> = vec![None; k];
        let mut offset = (header_end + 1).min(text.len());
        for line in text[offset..].split_inclusive('\n') {
            let start = offset;
            offset += line.len();
            let body = line.trim_end_matches(['\n', '\r']);
            if body.trim().is_empty() {
                continue;
            }
            let at = |pos: usize, msg: String| lift_format(format_at(text, start + pos, msg));
            let Some((lhs, rhs)) = body.split_once('=') else {
                return Err(at(0, "expected 'f<j> = <polynomial>'".into()));
            };
            let name = lhs.trim();
            let j: usize = name
                .strip_prefix('f')
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| at(body.find(name).unwrap_or(0), format!("bad coefficient name '{name}'")))?;
            if j >= k {
                return Err(at(
                    body.find(name).unwrap_or(0),
                    format!("coefficient index {j} out of range for k = {k}"),
                ));
            }
            if coeffs[j].is_some() {
                return Err(at(body.find(name).unwrap_or(0), format!("duplicate coefficient f{j}")));
            }
            let rhs_start = start + lhs.len() + 1;
            let p = parse_poly(rhs, &vars).map_err(|e| lift_format(poly_error_at(text, rhs_start, e)))?;
            coeffs[j] = Some(p);
        }
        let coeffs: Vec<MultiPoly> = coeffs
            .into_iter()
            .enumerate()
            .map(|(j, c)| {
                c.ok_or_else(|| lift_format(format_at(text, text.len(), format!("missing coefficient f{j}"))))
            })
            .collect::<Result<_, _>>()?;
        Self::from_coeffs(&coeffs, coords)
    }

    /// Substitutes `x = A·(x, y)` into the coefficients.
    pub fn restrict(&self, plane: &PlaneEmbedding) -> Result<FirstIntegral, EliminationError> {
        if plane.dim() != self.n() {
            return Err(EliminationError::DimensionMismatch {
                expected: self.n(),
                found: plane.dim(),
            });
        }
        let images = plane.images(&self.coords, None);
        FirstIntegral::new(&self.poly.compose(&images), default_coords(2))
    }
}

fn format_at(text: &str, pos: usize, message: String) -> WebError {
    let (line, col) = crate::poly::line_col(text, pos);
    WebError::Format { line, col, message }
}

impl fmt::Display for FirstIntegral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// Eliminates the parameter from `P = 0, dP = 0` (differentiating in the
/// coordinates only), giving the web whose leaves are the level sets.
pub fn web_from_first_integral(fi: &FirstIntegral) -> Result<Web, EliminationError> {
    let diffs: Vec<String> = fi.coords.iter().map(|c| differential_name(c)).collect();
    let dp = differential(&fi.poly, &fi.coords, &diffs);
    let r = resultant_any(&fi.poly.with_vars(&diffs), &dp, &fi.param);
    if r.is_zero() {
        return Err(EliminationError::ZeroResultant);
    }
    let content = content_in_block(&r, &diffs);
    let r = r.div_exact(&content).ok_or(PolyError::NotDivisible)?;
    let r = square_free_in_block(&r, &diffs);
    let found = r.homogeneous_degree_in(&diffs).ok_or(WebError::NotHomogeneous)?;
    if found != fi.k {
        return Err(EliminationError::DegenerateDegree { expected: fi.k, found });
    }
    Ok(Web::new(&r, fi.coords.clone(), fi.k)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verification {
    Verified,
    DegreeMismatch { web: u32, first_integral: u32 },
    FormMismatch,
}

impl Verification {
    pub fn holds(&self) -> bool {
        matches!(self, Verification::Verified)
    }
}

/// Compares `web` with the web eliminated from `fi`, as canonical forms.
pub fn verify_first_integral(web: &Web, fi: &FirstIntegral) -> Result<Verification, EliminationError> {
    if web.n() != fi.n() {
        return Err(EliminationError::DimensionMismatch {
            expected: web.n(),
            found: fi.n(),
        });
    }
    if web.k() != fi.k() {
        return Ok(Verification::DegreeMismatch {
            web: web.k(),
            first_integral: fi.k(),
        });
    }
    let web = web.renamed(&fi.coords)?;
    match web_from_first_integral(fi) {
        Ok(built) if built == web => Ok(Verification::Verified),
        Ok(_) => Ok(Verification::FormMismatch),
        Err(EliminationError::DegenerateDegree { found, .. }) => Ok(Verification::DegreeMismatch {
            web: web.k(),
            first_integral: found,
        }),
        Err(e) => Err(e),
    }
}

/// Monic characteristic polynomial of a function on the contact surface.
#[derive(Clone, Debug, PartialEq)]
pub struct CharPoly {
    /// Monic in `z`, over `x, y, z`.
    pub poly: MultiPoly,
    /// Set when the result has a repeated factor in `z` (the function does not
    /// separate the sheets).
    pub degenerate: bool,
}

impl CharPoly {
    pub fn first_integral(&self) -> Result<FirstIntegral, EliminationError> {
        FirstIntegral::new(&self.poly, default_coords(2))
    }
}

/// `Res_p(F, z − g)` normalized monic in `z`.
pub fn char_poly_of_function(ode: &ImplicitOde, g: &MultiPoly) -> Result<CharPoly, EliminationError> {
    let names = ["x", "y", "p", "z"];
    let vars = var_list(&names);
    let g = g.align_to(&chart_vars())?.align_to(&vars)?;
    let f = ode.f().align_to(&vars)?;
    let shifted = &MultiPoly::var(vars.clone(), "z")? - &g;
    let r = resultant_any(&f, &shifted, "p").align_to(&var_list(&["x", "y", "z"]))?;
    let lc = r.leading_coeff_in("z");
    if !is_unit(&lc) {
        return Err(EliminationError::NonUnitLeading(lc.trim_vars().to_string()));
    }
    let poly = r.scale(&lc.as_constant().expect("unit").inv());
    let degenerate = poly.degree_in("z").unwrap_or(0) == 0 || gcd(&poly, &poly.derivative("z")).depends_on("z");
    Ok(CharPoly { poly, degenerate })
}

/// True when `P_g(g) ≡ 0` modulo `F`, by exact pseudo-division in `p`.
pub fn char_poly_annihilates(ode: &ImplicitOde, g: &MultiPoly, cp: &CharPoly) -> Result<bool, EliminationError> {
    let g = g.align_to(&chart_vars())?;
    let images: HashMap<String, MultiPoly> = [("z".to_string(), g)].into();
    let composed = cp.poly.compose(&images).align_to(&chart_vars())?;
    Ok(pseudo_remainder(&composed, ode.f(), "p").is_zero())
}

/// Coordinates followed by their conjugates.
fn hermitian_vars(coords: &[String]) -> VarList {
    let names: Vec<String> = coords
        .iter()
        .cloned()
        .chain(coords.iter().map(|c| bar_name(c)))
        .collect();
    var_list(&names)
}

/// Scales a conj-swap-real polynomial by a real rational so its leading
/// coefficient has a unit real (or, failing that, imaginary) part.
fn normalize_real(p: &MultiPoly) -> MultiPoly {
    let lc = p.leading_coeff();
    let unit = if !lc.re.is_zero() { lc.re } else { lc.im };
    p.scale(&GaussianRational::from_rational(unit).inv())
}

/// `Res_z(P, P̄)`, where `P̄` conjugates coefficients and swaps each
/// coordinate with its `_bar` partner, normalized to be real.
pub fn leviflat_from_first_integral(fi: &FirstIntegral) -> Result<HermitianPoly, EliminationError> {
    let pairing = bar_pairing(&fi.coords);
    let bars: Vec<String> = fi.coords.iter().map(|c| bar_name(c)).collect();
    let p = fi.poly.with_vars(&bars);
    let pbar = conj_swap(&p, &pairing)?;
    let r = resultant_any(&p, &pbar, &fi.param);
    if r.is_zero() {
        return Err(EliminationError::ZeroResultant);
    }
    let r = if fi.k % 2 == 1 {
        r.scale(&-GaussianRational::i())
    } else {
        r
    };
    let r = normalize_real(&r.align_to(&hermitian_vars(&fi.coords))?);
    Ok(HermitianPoly::new(r, fi.coords.clone())?)
}

/// Evaluates `F` with each `x_bar` set to the conjugate of `x`. Returns the
/// modulus of the (real) value and whether it is below `tolerance`.
pub fn leviflat_membership(
    levi: &HermitianPoly,
    point: &[Complex64],
    tolerance: f64,
) -> Result<(f64, bool), NumericError> {
    let (value, scale) = levi.eval_at(point)?;
    if value.im.abs() > 1e-12 * scale {
        return Err(NumericError::NonReal { imag: value.im, scale });
    }
    let residual = value.re.abs();
    Ok((residual, residual < tolerance))
}

/// Substitutes `x = A·(x, y)` and `x_bar = Ā·(x_bar, y_bar)`.
pub fn restrict_hermitian(levi: &HermitianPoly, plane: &PlaneEmbedding) -> Result<HermitianPoly, EliminationError> {
    let coords = levi.holomorphic_vars();
    if plane.dim() != coords.len() {
        return Err(EliminationError::DimensionMismatch {
            expected: coords.len(),
            found: plane.dim(),
        });
    }
    let plane_coords = default_coords(2);
    let mut images = plane.images(coords, None);
    let rename: HashMap<String, String> = plane_coords.iter().map(|c| (c.clone(), bar_name(c))).collect();
    for (c, img) in plane.conjugate().images(coords, None) {
        images.insert(bar_name(&c), img.rename(&rename));
    }
    let out = levi.base().compose(&images).align_to(&hermitian_vars(&plane_coords))?;
    Ok(HermitianPoly::new(out, plane_coords)?)
}

/// True when `a = c·b` for a nonzero real rational `c`.
pub fn real_associate(a: &MultiPoly, b: &MultiPoly) -> bool {
    if a.is_zero() || b.is_zero() {
        return a.is_zero() && b.is_zero();
    }
    let ratio = a.leading_coeff() / b.leading_coeff();
    ratio.is_real() && !ratio.is_zero() && *a == b.scale(&ratio)
}
