#![allow(dead_code)]

use holoweb::poly::{var_list, GaussianRational, MultiPoly};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small Gaussian rational with numerators in [-5, 5] and denominators in [1, 3].
pub fn gaussian(rng: &mut ChaCha8Rng) -> GaussianRational {
    let re = (rng.gen_range(-5..=5), rng.gen_range(1..=3));
    let im = if rng.gen_bool(0.5) {
        (rng.gen_range(-5..=5), rng.gen_range(1..=3))
    } else {
        (0, 1)
    };
    GaussianRational::from_parts(re, im)
}

pub fn nonzero_gaussian(rng: &mut ChaCha8Rng) -> GaussianRational {
    loop {
        let c = gaussian(rng);
        if !num_traits::Zero::is_zero(&c) {
            return c;
        }
    }
}

/// Exponent vectors of total degree at most `deg` in `n` variables.
pub fn monomials(n: usize, deg: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for e in 0..=deg {
        for mut rest in monomials(n - 1, deg - e) {
            rest.insert(0, e);
            out.push(rest);
        }
    }
    out
}

/// Random polynomial over `names` of total degree at most `deg`, each
/// monomial present with probability `density`.
pub fn random_poly(rng: &mut ChaCha8Rng, names: &[&str], deg: u32, density: f64) -> MultiPoly {
    let mut terms = Vec::new();
    for e in monomials(names.len(), deg) {
        if rng.gen_bool(density) {
            terms.push((e, gaussian(rng)));
        }
    }
    MultiPoly::from_terms(var_list(names), terms)
}

/// Coefficients `c₀, …, c_{d−1}` of a random monic univariate polynomial.
pub fn monic_coeffs(rng: &mut ChaCha8Rng, d: u32) -> Vec<GaussianRational> {
    (0..d).map(|_| gaussian(rng)).collect()
}

/// `Σ cⱼ tʲ + t^d` over `names`, with `t` at position `idx`.
pub fn univariate(names: &[&str], idx: usize, coeffs: &[GaussianRational], monic: bool) -> MultiPoly {
    let mut terms: Vec<(Vec<u32>, GaussianRational)> = coeffs
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let mut e = vec![0; names.len()];
            e[idx] = j as u32;
            (e, c.clone())
        })
        .collect();
    if monic {
        let mut e = vec![0; names.len()];
        e[idx] = coeffs.len() as u32;
        terms.push((e, GaussianRational::from_integer(1)));
    }
    MultiPoly::from_terms(var_list(names), terms)
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
