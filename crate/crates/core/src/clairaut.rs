//! Clairaut equations `y = x p + f(p)`.

use crate::contact::{chart_vars, ContactError, ImplicitOde};
use crate::elimination::FirstIntegral;
use crate::poly::{differential, var_list, MultiPoly, PolyError};
use crate::web::{default_coords, Web};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ClairautError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("f must be a polynomial in p alone")]
    NotUnivariate,
    #[error("f has degree {0}, need at least 2")]
    DegreeTooSmall(u32),
    #[error("dx-coefficient of the restricted contact form does not cancel: {0}")]
    NoCancellation(String),
    #[error(transparent)]
    Contact(#[from] ContactError),
}

/// `f ∈ ℂ[p]`, normalized monic, of degree at least 2.
#[derive(Clone, Debug, PartialEq)]
pub struct ClairautEquation {
    f: MultiPoly,
    k: u32,
}

impl ClairautEquation {
    pub fn new(f: &MultiPoly) -> Result<Self, ClairautError> {
        let f = f
            .align_to(&var_list(&["p"]))
            .map_err(|_| ClairautError::NotUnivariate)?;
        let k = f.degree_in("p").unwrap_or(0);
        if k < 2 {
            return Err(ClairautError::DegreeTooSmall(k));
        }
        let lc = f.leading_coeff();
        Ok(Self {
            f: f.scale(&lc.inv()),
            k,
        })
    }

    pub fn parse(text: &str) -> Result<Self, ClairautError> {
        match MultiPoly::parse(text, &["p"]) {
            Err(PolyError::UnknownIdentifier { .. }) => Err(ClairautError::NotUnivariate),
            other => Self::new(&other?),
        }
    }

    pub fn f(&self) -> &MultiPoly {
        &self.f
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    fn f_in(&self, vars: &[&str], name: &str) -> MultiPoly {
        let map: HashMap<String, String> = [("p".to_string(), name.to_string())].into();
        self.f.rename(&map).align_to(&var_list(vars)).expect("univariate f")
    }
}

/// `F = y − x p − f(p)`.
pub fn clairaut_ode(eq: &ClairautEquation) -> ImplicitOde {
    let vars = chart_vars();
    let xyp = MultiPoly::parse("y - x*p", &["x", "y", "p"]).expect("fixed text");
    let f = &xyp - &eq.f_in(&["x", "y", "p"], "p");
    debug_assert_eq!(f.vars(), &vars);
    ImplicitOde::new(&f).expect("Clairaut equations are square-free with unit content")
}

/// `P(z) = f(z) + x z − y`.
pub fn clairaut_first_integral(eq: &ClairautEquation) -> FirstIntegral {
    let xz = MultiPoly::parse("x*z - y", &["x", "y", "z"]).expect("fixed text");
    let p = &eq.f_in(&["x", "y", "z"], "z") + &xz;
    FirstIntegral::new(&p, default_coords(2)).expect("Clairaut families are monic and square-free")
}

/// `(y − x p − f(p), x + f′(p))`.
pub fn clairaut_criminant(eq: &ClairautEquation) -> (MultiPoly, MultiPoly) {
    let ode = clairaut_ode(eq);
    let x = MultiPoly::var(chart_vars(), "x").expect("chart variable");
    (ode.f().clone(), &x + &eq.f_in(&["x", "y", "p"], "p").derivative("p"))
}

/// Restricts `α = dy − p dx` to `S` in the chart `(x, p)` with
/// `y = x p + f(p)`. The `dx` coefficient must cancel; returns the `dp`
/// coefficient `x + f′(p)`.
pub fn clairaut_alpha_restriction(eq: &ClairautEquation) -> Result<MultiPoly, ClairautError> {
    let names = ["x", "p", "dx", "dp"];
    let vars = var_list(&names);
    let coords = vec!["x".to_string(), "p".to_string()];
    let diffs = vec!["dx".to_string(), "dp".to_string()];
    let y = &MultiPoly::parse("x*p", &names)? + &eq.f_in(&names, "p");
    let dy = differential(&y, &coords, &diffs).align_to(&vars)?;
    let p_dx = MultiPoly::parse("p*dx", &names)?;
    let alpha = &dy - &p_dx;
    let dx_coeff = alpha.derivative("dx");
    if !dx_coeff.is_zero() {
        return Err(ClairautError::NoCancellation(dx_coeff.to_string()));
    }
    Ok(alpha.derivative("dp").align_to(&chart_vars())?)
}

/// The web `Σ a_j dy^j dx^(k−j)` of the Clairaut ODE.
pub fn clairaut_web(eq: &ClairautEquation) -> Result<Web, ClairautError> {
    Ok(clairaut_ode(eq).to_web()?)
}
