//! Flattened polynomials for repeated floating-point evaluation.

use crate::poly::MultiPoly;
use num_complex::Complex64;

/// A polynomial reduced to `(coefficient, exponents)` pairs over a fixed
/// ordering of variables.
#[derive(Clone, Debug)]
pub(crate) struct CompiledPoly {
    terms: Vec<(Complex64, Vec<u32>)>,
}

impl CompiledPoly {
    /// `order` lists variable names; every used variable must appear in it.
    pub fn new(p: &MultiPoly, order: &[&str]) -> Self {
        let idx: Vec<Option<usize>> = p.vars().iter().map(|v| order.iter().position(|o| o == v)).collect();
        let terms = p
            .terms()
            .map(|(m, c)| {
                let mut e = vec![0u32; order.len()];
                for (i, &k) in m.exponents().iter().enumerate() {
                    if k > 0 {
                        e[idx[i].expect("variable in evaluation order")] = k;
                    }
                }
                (c.to_complex(), e)
            })
            .collect();
        Self { terms }
    }

    pub fn eval(&self, point: &[Complex64]) -> Complex64 {
        self.terms.iter().map(|(c, e)| c * monomial(point, e)).sum()
    }

    /// Sum of the moduli of the evaluated terms.
    pub fn abs_scale(&self, point: &[Complex64]) -> f64 {
        self.terms.iter().map(|(c, e)| (c * monomial(point, e)).norm()).sum()
    }
}

fn monomial(point: &[Complex64], e: &[u32]) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    for (z, &k) in point.iter().zip(e) {
        if k > 0 {
            acc *= z.powu(k);
        }
    }
    acc
}
