//! Simultaneous root finding (Aberth–Ehrlich iteration) for complex
//! univariate polynomials.

use super::NumericError;
use num_complex::Complex64;

pub const DEFAULT_MAX_ITERATIONS: usize = 500;

/// Evaluates `p` and `p'` at `z` by Horner's scheme; coefficients lowest first.
pub fn horner_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Rounding-error bound for evaluating `coeffs` at `z`.
fn eval_error_bound(coeffs: &[Complex64], z: Complex64) -> f64 {
    let r = z.norm();
    let mut acc = 0.0;
    for c in coeffs.iter().rev() {
        acc = acc * r + c.norm();
    }
    acc * 16.0 * f64::EPSILON
}

/// All complex roots of the polynomial with coefficients `coeffs` (lowest
/// degree first), counted with multiplicity. Exactly-zero leading
/// coefficients are dropped first. The initial guesses lie on a circle of
/// Fujiwara-bound radius with a fixed angular offset, so results are
/// deterministic.
pub fn polynomial_roots(coeffs: &[Complex64], max_iterations: usize) -> Result<Vec<Complex64>, NumericError> {
    let mut coeffs = coeffs.to_vec();
    while coeffs.last().is_some_and(|c| *c == Complex64::new(0.0, 0.0)) {
        coeffs.pop();
    }
    if coeffs.is_empty() {
        return Err(NumericError::ZeroPolynomial);
    }
    let degree = coeffs.len() - 1;
    if degree == 0 {
        return Ok(vec![]);
    }
    let lead = coeffs[degree];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    if degree == 1 {
        return Ok(vec![-monic[0]]);
    }

    // zero roots are split off exactly
    let zeros = monic.iter().take_while(|c| c.norm() == 0.0).count();
    let reduced = &monic[zeros..];
    let deg = reduced.len() - 1;
    let mut roots = vec![Complex64::new(0.0, 0.0); zeros];
    if deg == 0 {
        return Ok(roots);
    }

    let radius = fujiwara_bound(reduced);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / deg as f64 + 0.4;
            Complex64::from_polar(radius, theta)
        })
        .collect();
    let mut done = vec![false; deg];
    for _ in 0..max_iterations {
        for i in 0..deg {
            if done[i] {
                continue;
            }
            let (p, dp) = horner_with_derivative(reduced, z[i]);
            if p.norm() <= eval_error_bound(reduced, z[i]) {
                done[i] = true;
                continue;
            }
            let ratio = p / dp;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..deg {
                if j != i {
                    let d = z[i] - z[j];
                    if d.norm() > 0.0 {
                        s += 1.0 / d;
                    }
                }
            }
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if !step.re.is_finite() || !step.im.is_finite() {
                // perturb off a critical point
                let nudge = Complex64::new(1e-8 * (1.0 + z[i].norm()), 1e-8);
                z[i] += nudge;
                continue;
            }
            z[i] -= step;
            if step.norm() <= 4.0 * f64::EPSILON * (1.0 + z[i].norm()) {
                done[i] = true;
            }
        }
        if done.iter().all(|&d| d) {
            roots.extend(z);
            return Ok(roots);
        }
    }
    Err(NumericError::NoConvergence {
        iterations: max_iterations,
    })
}

fn fujiwara_bound(monic: &[Complex64]) -> f64 {
    let n = monic.len() - 1;
    let mut b: f64 = 0.0;
    for (k, c) in monic.iter().enumerate().take(n) {
        let exp = 1.0 / (n - k) as f64;
        let mut v = c.norm();
        if k == 0 {
            v /= 2.0;
        }
        b = b.max(v.powf(exp));
    }
    (2.0 * b).max(f64::MIN_POSITIVE.sqrt())
}

/// Groups roots lying within `radius` of each other (single linkage).
/// Returns `(mean, multiplicity)` pairs in input order of first member.
pub fn cluster_roots(roots: &[Complex64], radius: f64) -> Vec<(Complex64, usize)> {
    let n = roots.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while p[r] != r {
            r = p[r];
        }
        p[i] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            if (roots[i] - roots[j]).norm() <= radius {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[b.max(a)] = a.min(b);
                }
            }
        }
    }
    let mut groups: Vec<(usize, Complex64, usize)> = Vec::new();
    for (i, &root) in roots.iter().enumerate() {
        let r = find(&mut parent, i);
        match groups.iter_mut().find(|g| g.0 == r) {
            Some(g) => {
                g.1 += root;
                g.2 += 1;
            }
            None => groups.push((r, root, 1)),
        }
    }
    groups.into_iter().map(|(_, sum, m)| (sum / m as f64, m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sorted(mut v: Vec<Complex64>) -> Vec<Complex64> {
        v.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap().then(a.im.partial_cmp(&b.im).unwrap()));
        v
    }

    #[test]
    fn quadratic_unit_roots() {
        // p^2 - 1
        let r = sorted(polynomial_roots(&[c(-1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)], 500).unwrap());
        assert!((r[0] - c(-1.0, 0.0)).norm() < 1e-14);
        assert!((r[1] - c(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn cubic_with_complex_coefficients() {
        // (z - i)(z + 2)(z - 3 + i)
        let roots = [c(0.0, 1.0), c(-2.0, 0.0), c(3.0, -1.0)];
        let mut coeffs = vec![c(1.0, 0.0)];
        for r in roots {
            let mut next = vec![c(0.0, 0.0); coeffs.len() + 1];
            for (k, a) in coeffs.iter().enumerate() {
                next[k + 1] += a;
                next[k] -= a * r;
            }
            coeffs = next;
        }
        let found = polynomial_roots(&coeffs, 500).unwrap();
        for r in roots {
            assert!(found.iter().any(|f| (f - r).norm() < 1e-12), "missing {r}");
        }
    }

    #[test]
    fn double_root_clusters() {
        // (z - 1)^2 (z + 1)
        let found = polynomial_roots(&[c(1.0, 0.0), c(-1.0, 0.0), c(-1.0, 0.0), c(1.0, 0.0)], 500).unwrap();
        let clusters = cluster_roots(&found, 1e-4);
        assert_eq!(clusters.len(), 2);
        let double = clusters.iter().find(|c| c.1 == 2).unwrap();
        assert!((double.0 - c(1.0, 0.0)).norm() < 1e-6);
    }

    #[test]
    fn zero_roots_split_off() {
        let found = polynomial_roots(&[c(0.0, 0.0), c(0.0, 0.0), c(-4.0, 0.0), c(1.0, 0.0)], 500).unwrap();
        assert_eq!(found.iter().filter(|z| z.norm() == 0.0).count(), 2);
        assert!(found.iter().any(|z| (z - c(4.0, 0.0)).norm() < 1e-13));
    }

    #[test]
    fn constant_has_no_roots() {
        assert!(polynomial_roots(&[c(3.0, 0.0)], 10).unwrap().is_empty());
        assert!(polynomial_roots(&[c(0.0, 0.0)], 10).is_err());
    }
}
