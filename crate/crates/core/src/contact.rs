//! Planar webs as implicit first-order ODEs `F(x, y, p) = 0` on the contact
//! chart `p = dy/dx`, with criminant, discriminant and the lifted field.

use crate::numeric::{cluster_roots, polynomial_roots, roots::DEFAULT_MAX_ITERATIONS, NumericError};
use crate::poly::{
    content_in, discriminant_in, gcd, is_unit, resultant, square_free_full, var_list, MultiPoly, PolyError, VarList,
};
use crate::web::{default_coords, Web, WebError};
use num_complex::Complex64;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ContactError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Web(#[from] WebError),
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error("the web is not planar (n = {0})")]
    NotPlanar(usize),
    #[error("coefficient of dy^k vanishes identically; change chart first")]
    TangentChart,
    #[error("F has degree 0 in p")]
    NoSheets,
    #[error("F has a repeated factor in p")]
    SquareFactor,
    #[error("content of F in p is not a unit: {0}")]
    CommonFactor(String),
    #[error("the discriminant needs k >= 2, got k = {0}")]
    DiscriminantEmpty(u32),
}

/// Names of the chart variables `x, y, p`.
pub fn chart_vars() -> VarList {
    var_list(&["x", "y", "p"])
}

#[derive(Clone, Debug, PartialEq)]
pub struct ImplicitOde {
    f: MultiPoly,
    k: u32,
}

impl ImplicitOde {
    /// Validates `F` over `x, y, p`; `k` is its degree in `p`.
    pub fn new(f: &MultiPoly) -> Result<Self, ContactError> {
        let f = f.align_to(&chart_vars())?;
        let k = match f.degree_in("p") {
            None | Some(0) => return Err(ContactError::NoSheets),
            Some(k) => k,
        };
        let content = content_in(&f, "p");
        if !is_unit(&content) {
            return Err(ContactError::CommonFactor(content.trim_vars().to_string()));
        }
        let g = gcd(&f, &f.derivative("p"));
        if g.depends_on("p") {
            return Err(ContactError::SquareFactor);
        }
        Ok(Self { f, k })
    }

    pub fn parse(text: &str) -> Result<Self, ContactError> {
        Self::new(&MultiPoly::parse(text, &["x", "y", "p"])?)
    }

    pub fn f(&self) -> &MultiPoly {
        &self.f
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Homogenizes back to the symmetric form `Σ a_j(x,y) dy^j dx^(k-j)`.
    pub fn to_web(&self) -> Result<Web, ContactError> {
        let coords = default_coords(2);
        let vars = crate::web::web_vars(&coords);
        let dx = MultiPoly::var(vars.clone(), "dx")?;
        let dy = MultiPoly::var(vars.clone(), "dy")?;
        let mut form = MultiPoly::zero(vars.clone());
        for (j, a) in self.f.coeffs_in("p").iter().enumerate() {
            let a = a.trim_vars().align_to(&vars)?;
            form = &form + &(&a * &(&dy.pow(j as u32) * &dx.pow(self.k - j as u32)));
        }
        Ok(Web::new(&form, coords, self.k)?)
    }

    /// Numeric coefficients of `F(x0, y0, ·)`, lowest degree first.
    pub fn fiber_coefficients(&self, x0: Complex64, y0: Complex64) -> Result<Vec<Complex64>, ContactError> {
        let values: HashMap<String, Complex64> = [("x".to_string(), x0), ("y".to_string(), y0)].into();
        let mut out = Vec::new();
        for c in self.f.coeffs_in("p") {
            out.push(c.eval_complex(&values)?);
        }
        Ok(out)
    }

    pub fn eval(&self, point: [Complex64; 3]) -> Complex64 {
        eval3(&self.f, point)
    }
}

pub(crate) fn eval3(p: &MultiPoly, point: [Complex64; 3]) -> Complex64 {
    let values: HashMap<String, Complex64> = [
        ("x".to_string(), point[0]),
        ("y".to_string(), point[1]),
        ("p".to_string(), point[2]),
    ]
    .into();
    p.eval_complex(&values).expect("chart polynomial uses x, y, p only")
}

/// Dehomogenizes a planar web with `dx ↦ 1, dy ↦ p`.
pub fn to_implicit_ode(web: &Web) -> Result<ImplicitOde, ContactError> {
    if web.n() != 2 {
        return Err(ContactError::NotPlanar(web.n()));
    }
    let web = web.renamed(&default_coords(2))?;
    let vars = chart_vars();
    let images: HashMap<String, MultiPoly> = [
        ("x".to_string(), MultiPoly::var(vars.clone(), "x")?),
        ("y".to_string(), MultiPoly::var(vars.clone(), "y")?),
        ("dx".to_string(), MultiPoly::one(vars.clone())),
        ("dy".to_string(), MultiPoly::var(vars.clone(), "p")?),
    ]
    .into();
    let f = web.form().compose(&images).align_to(&vars)?;
    if f.degree_in("p") != Some(web.k()) {
        return Err(ContactError::TangentChart);
    }
    ImplicitOde::new(&f)
}

/// The pair `(F, ∂F/∂p)` cutting out the criminant.
pub fn criminant_ideal(ode: &ImplicitOde) -> (MultiPoly, MultiPoly) {
    (ode.f.clone(), ode.f.derivative("p"))
}

/// `Res_p(F, F_p) / lc_p(F)` over `x, y`, without normalization; the
/// constant 1 when `k = 1`.
pub fn discriminant_poly(ode: &ImplicitOde) -> Result<MultiPoly, ContactError> {
    let base = var_list(&["x", "y"]);
    if ode.k < 2 {
        return Ok(MultiPoly::one(base));
    }
    let r = resultant(&ode.f, &ode.f.derivative("p"), "p")?;
    let lc = ode.f.leading_coeff_in("p").trim_vars();
    let d = r.trim_vars().div_exact(&lc).ok_or(PolyError::NotDivisible)?;
    Ok(d.align_to(&base)?)
}

/// Reduced defining polynomial of the discriminant curve in `x, y`.
pub fn discriminant_curve(ode: &ImplicitOde) -> Result<MultiPoly, ContactError> {
    if ode.k < 2 {
        return Err(ContactError::DiscriminantEmpty(ode.k));
    }
    let d = discriminant_in(&ode.f, "p")?;
    Ok(square_free_full(&d).align_to(&var_list(&["x", "y"]))?)
}

/// The vector field `(F_p, p·F_p, −(F_x + p·F_y))`, tangent to `S` and
/// annihilated by `dy − p dx`.
#[derive(Clone, Debug, PartialEq)]
pub struct LiftedField {
    pub vx: MultiPoly,
    pub vy: MultiPoly,
    pub vp: MultiPoly,
}

impl LiftedField {
    /// `Vx F_x + Vy F_y + Vp F_p`; zero for a correct field.
    pub fn tangency_defect(&self, ode: &ImplicitOde) -> MultiPoly {
        let f = &ode.f;
        &(&(&self.vx * &f.derivative("x")) + &(&self.vy * &f.derivative("y"))) + &(&self.vp * &f.derivative("p"))
    }

    /// `Vy − p Vx`; zero for a correct field.
    pub fn contact_defect(&self) -> MultiPoly {
        let p = MultiPoly::var(chart_vars(), "p").expect("chart variable");
        &self.vy - &(&p * &self.vx)
    }

    pub fn eval(&self, point: [Complex64; 3]) -> [Complex64; 3] {
        [eval3(&self.vx, point), eval3(&self.vy, point), eval3(&self.vp, point)]
    }
}

pub fn lifted_field(ode: &ImplicitOde) -> LiftedField {
    let f = &ode.f;
    let p = MultiPoly::var(chart_vars(), "p").expect("chart variable");
    let fp = f.derivative("p");
    let field = LiftedField {
        vx: fp.clone(),
        vy: &p * &fp,
        vp: -(&f.derivative("x") + &(&p * &f.derivative("y"))),
    };
    debug_assert!(field.tangency_defect(ode).is_zero());
    debug_assert!(field.contact_defect().is_zero());
    field
}

/// Roots of `F(x0, y0, ·)` with multiplicities.
#[derive(Clone, Debug, PartialEq)]
pub struct FiberPoints {
    /// `(root, multiplicity)`; multiplicities above 1 only when clustered.
    pub roots: Vec<(Complex64, usize)>,
    /// Value of [`discriminant_poly`] at the base point.
    pub discriminant: Complex64,
    pub clustered: bool,
}

impl FiberPoints {
    pub fn distinct(&self) -> usize {
        self.roots.len()
    }
}

/// All sheets over `(x0, y0)`. Roots are merged into clusters when the
/// discriminant is below `tolerance` in modulus.
pub fn fiber_points(
    ode: &ImplicitOde,
    x0: Complex64,
    y0: Complex64,
    tolerance: f64,
) -> Result<FiberPoints, ContactError> {
    let coeffs = ode.fiber_coefficients(x0, y0)?;
    let roots = polynomial_roots(&coeffs, DEFAULT_MAX_ITERATIONS)?;
    let values: HashMap<String, Complex64> = [("x".to_string(), x0), ("y".to_string(), y0)].into();
    let discriminant = discriminant_poly(ode)?.eval_complex(&values)?;
    if discriminant.norm() < tolerance {
        let scale = roots.iter().map(|r| r.norm()).fold(1.0, f64::max);
        let radius = tolerance.sqrt().max(1e-6) * scale;
        Ok(FiberPoints {
            roots: cluster_roots(&roots, radius),
            discriminant,
            clustered: true,
        })
    } else {
        Ok(FiberPoints {
            roots: roots.into_iter().map(|r| (r, 1)).collect(),
            discriminant,
            clustered: false,
        })
    }
}
