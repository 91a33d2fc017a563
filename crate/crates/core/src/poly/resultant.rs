//! Sylvester resultants and discriminants.
//!
//! Convention: `Res(f, g) = lc(f)^deg(g) · Π g(α)` over the roots `α` of `f`,
//! which is the determinant of the Sylvester matrix whose first `deg g` rows
//! hold the coefficients of `f` (highest degree first). Degrees are taken as
//! given: if a leading coefficient vanishes after a later substitution the
//! matrix is not rebuilt, so callers wanting the projective convention must
//! normalize first.

use super::multipoly::{MultiPoly, VarList};
use super::PolyError;

/// Sylvester matrix of `f` and `g` with respect to `var`.
pub fn sylvester_matrix(f: &MultiPoly, g: &MultiPoly, var: &str) -> Vec<Vec<MultiPoly>> {
    let vars = aligned_vars(f, g, var);
    let f = f.align_to(&vars).expect("align");
    let g = g.align_to(&vars).expect("align");
    let fc = f.coeffs_in(var);
    let gc = g.coeffs_in(var);
    let m = fc.len().saturating_sub(1);
    let l = gc.len().saturating_sub(1);
    let n = m + l;
    let zero = MultiPoly::zero(vars.clone());
    let mut rows = Vec::with_capacity(n);
    for shift in 0..l {
        let mut row = vec![zero.clone(); n];
        for (k, c) in fc.iter().rev().enumerate() {
            row[shift + k] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![zero.clone(); n];
        for (k, c) in gc.iter().rev().enumerate() {
            row[shift + k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

fn aligned_vars(f: &MultiPoly, g: &MultiPoly, var: &str) -> VarList {
    let mut names = MultiPoly::union_vars(f.vars(), g.vars()).to_vec();
    if !names.iter().any(|n| n == var) {
        names.push(var.to_string());
    }
    names.into()
}

/// Determinant by fraction-free (Bareiss) elimination. Every division is exact
/// in the polynomial ring.
pub fn determinant(mut m: Vec<Vec<MultiPoly>>, vars: &VarList) -> MultiPoly {
    let n = m.len();
    if n == 0 {
        return MultiPoly::one(vars.clone());
    }
    let mut negate = false;
    let mut prev = MultiPoly::one(vars.clone());
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return MultiPoly::zero(vars.clone()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Resultant allowing degree-zero arguments: `Res(f, c) = c^deg f`,
/// `Res(c, g) = c^deg g`. The eliminated variable is dropped from the result's
/// variable list.
pub(crate) fn resultant_any(f: &MultiPoly, g: &MultiPoly, var: &str) -> MultiPoly {
    let vars = aligned_vars(f, g, var);
    let out = determinant(sylvester_matrix(f, g, var), &vars);
    drop_var(&out, var)
}

fn drop_var(p: &MultiPoly, var: &str) -> MultiPoly {
    let keep: Vec<String> = p.vars().iter().filter(|v| *v != var).cloned().collect();
    p.align_to(&keep.into()).expect("eliminated variable is absent")
}

/// Sylvester resultant of `f` and `g` with respect to `var`.
pub fn resultant(f: &MultiPoly, g: &MultiPoly, var: &str) -> Result<MultiPoly, PolyError> {
    for p in [f, g] {
        if matches!(p.degree_in(var), None | Some(0)) {
            return Err(PolyError::DegreeZero { var: var.to_string() });
        }
    }
    Ok(resultant_any(f, g, var))
}

/// `Res(p, ∂p/∂var) / lc(p)`, normalized to leading coefficient 1.
pub fn discriminant_in(p: &MultiPoly, var: &str) -> Result<MultiPoly, PolyError> {
    let degree = p.degree_in(var).unwrap_or(0);
    if degree < 2 {
        return Err(PolyError::DegreeTooSmall {
            var: var.to_string(),
            degree,
            required: 2,
        });
    }
    let r = resultant_any(p, &p.derivative(var), var);
    let lc = drop_var(&p.leading_coeff_in(var), var);
    let d = r.div_exact(&lc).ok_or(PolyError::NotDivisible)?;
    Ok(d.monic())
}
