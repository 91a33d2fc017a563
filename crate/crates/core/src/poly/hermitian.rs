//! Conjugation with variable swapping, and real-valued polynomials in
//! variables and their formal conjugates.

use super::multipoly::MultiPoly;
use super::PolyError;
use num_complex::Complex64;
use std::collections::HashMap;

/// Suffix marking the formal conjugate of a variable.
pub const BAR_SUFFIX: &str = "_bar";

pub fn bar_name(name: &str) -> String {
    format!("{name}{BAR_SUFFIX}")
}

/// The involution `x ↔ x_bar` for each listed name.
pub fn bar_pairing<S: AsRef<str>>(names: &[S]) -> HashMap<String, String> {
    let mut map = HashMap::new();
    for n in names {
        let n = n.as_ref().to_string();
        map.insert(bar_name(&n), n.clone());
        map.insert(n.clone(), bar_name(&n));
    }
    map
}

fn check_involution(pairing: &HashMap<String, String>) -> Result<(), PolyError> {
    for (a, b) in pairing {
        if a == b {
            continue;
        }
        match pairing.get(b) {
            Some(back) if back == a => {}
            _ => return Err(PolyError::NotInvolution(format!("{a} -> {b}"))),
        }
    }
    Ok(())
}

/// Conjugates every coefficient and renames variables by `pairing`. Names not
/// in the map are fixed.
pub fn conj_swap(p: &MultiPoly, pairing: &HashMap<String, String>) -> Result<MultiPoly, PolyError> {
    check_involution(pairing)?;
    Ok(p.conj_coeffs().rename(pairing))
}

/// A polynomial in `x_j, x_j_bar` that is fixed by conjugate-swapping, so it
/// takes real values when each `x_j_bar` is set to the conjugate of `x_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianPoly {
    base: MultiPoly,
    holomorphic: Vec<String>,
}

impl HermitianPoly {
    /// Wraps `base`, checking it is invariant under `x ↔ x_bar` plus
    /// coefficient conjugation.
    pub fn new(base: MultiPoly, holomorphic: Vec<String>) -> Result<Self, PolyError> {
        let pairing = bar_pairing(&holomorphic);
        if conj_swap(&base, &pairing)? != base {
            return Err(PolyError::NotReal);
        }
        Ok(Self { base, holomorphic })
    }

    pub fn base(&self) -> &MultiPoly {
        &self.base
    }

    /// Names of the holomorphic variables `x_j`.
    pub fn holomorphic_vars(&self) -> &[String] {
        &self.holomorphic
    }

    pub fn pairing(&self) -> HashMap<String, String> {
        bar_pairing(&self.holomorphic)
    }

    pub fn conj_swap(&self) -> MultiPoly {
        conj_swap(&self.base, &self.pairing()).expect("bar pairing is an involution")
    }

    /// Evaluates at `point` (one value per holomorphic variable) with each
    /// conjugate variable set to the complex conjugate. Also returns the
    /// absolute-term scale of the evaluation.
    pub fn eval_at(&self, point: &[Complex64]) -> Result<(Complex64, f64), PolyError> {
        if point.len() != self.holomorphic.len() {
            return Err(PolyError::DimensionMismatch {
                expected: self.holomorphic.len(),
                found: point.len(),
            });
        }
        let mut values = HashMap::new();
        for (name, z) in self.holomorphic.iter().zip(point) {
            values.insert(name.clone(), *z);
            values.insert(bar_name(name), z.conj());
        }
        Ok((self.base.eval_complex(&values)?, self.base.eval_abs_scale(&values)?))
    }
}

impl std::fmt::Display for HermitianPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.base.fmt(f)
    }
}
