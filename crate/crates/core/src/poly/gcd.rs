//! Multivariate GCD by recursive subresultant remainder sequences, plus the
//! content / square-free helpers built on it.
//!
//! A polynomial is viewed as univariate in a chosen main variable with
//! coefficients in the ring of the remaining variables. Contents are computed
//! recursively, and the primitive parts go through the subresultant PRS, whose
//! divisions are all exact.

use super::gaussian::GaussianRational;
use super::multipoly::{Monomial, MultiPoly, VarList};
use super::PolyError;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Greatest common divisor, normalized so its graded-lex leading coefficient
/// is 1. `gcd(a, 0)` is `a` normalized; `gcd(0, 0)` is 0.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let vars = MultiPoly::union_vars(a.vars(), b.vars());
    let a = a.align_to(&vars).expect("union");
    let b = b.align_to(&vars).expect("union");
    gcd_rec(&a, &b).monic()
}

/// GCD of a list of polynomials, normalized as in [`gcd`].
pub fn gcd_many<'a, I: IntoIterator<Item = &'a MultiPoly>>(items: I) -> Option<MultiPoly> {
    let items: Vec<&MultiPoly> = items.into_iter().collect();
    if items.len() > 2 {
        let vars = items
            .iter()
            .fold(items[0].vars().clone(), |v, p| MultiPoly::union_vars(&v, p.vars()));
        let mut aligned: Vec<MultiPoly> = items
            .iter()
            .filter(|p| !p.is_zero())
            .map(|p| p.align_to(&vars).expect("union"))
            .collect();
        aligned.sort_by_key(|p| p.num_terms());
        let refs: Vec<&MultiPoly> = aligned.iter().collect();
        if !refs.is_empty() && vars.iter().all(|v| absent_from_gcd_of(&refs, v)) {
            return Some(MultiPoly::one(vars));
        }
    }
    let mut acc: Option<MultiPoly> = None;
    for p in items {
        acc = Some(match acc {
            None => p.monic(),
            Some(g) => {
                if g.is_constant() && !g.is_zero() {
                    return Some(g);
                }
                gcd(&g, p)
            }
        });
    }
    acc
}

fn gcd_rec(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one(a.vars().clone());
    }
    let ua = a.used_vars();
    let ub = b.used_vars();
    // A variable present in only one operand can be stripped via its content.
    if let Some(v) = ua.iter().find(|v| !ub.contains(v)) {
        return gcd_rec(&content_in(a, v), b);
    }
    if let Some(v) = ub.iter().find(|v| !ua.contains(v)) {
        return gcd_rec(a, &content_in(b, v));
    }
    // A variable provably absent from the gcd reduces to the contents.
    for v in &ua {
        if absent_from_gcd_of(&[a, b], v) {
            return gcd_rec(&content_in(a, v), &content_in(b, v));
        }
    }
    // Shared variables only: recurse on the one of smallest degree.
    let v = ua
        .iter()
        .min_by_key(|v| a.degree_in(v).unwrap().max(b.degree_in(v).unwrap()))
        .unwrap()
        .clone();
    let ca = content_in(a, &v);
    let cb = content_in(b, &v);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let c = gcd_rec(&ca, &cb);
    let g = subresultant_primitive_gcd(&pa, &pb, &v);
    &c * &g
}

/// Coefficients (lowest first) in variable `iv` after setting every other
/// variable `j` to `point[j]`.
fn specialize(p: &MultiPoly, iv: usize, point: &[GaussianRational]) -> Vec<GaussianRational> {
    let mut out = vec![GaussianRational::zero(); p.degree_in(&p.vars()[iv]).unwrap_or(0) as usize + 1];
    for (m, c) in p.terms() {
        let mut coeff = c.clone();
        for (j, &e) in m.0.iter().enumerate() {
            if j != iv && e > 0 {
                coeff = &coeff * &point[j].pow(e);
            }
        }
        out[m.0[iv] as usize] += &coeff;
    }
    out
}

/// Monic gcd of two univariate polynomials (lowest first, trimmed).
fn univariate_gcd(mut a: Vec<GaussianRational>, mut b: Vec<GaussianRational>) -> Vec<GaussianRational> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let inv = b.last().expect("nonempty").inv();
        for c in b.iter_mut() {
            *c = &*c * &inv;
        }
        while a.len() >= b.len() {
            let lead = a.pop().expect("nonempty");
            let shift = a.len() + 1 - b.len();
            for (i, c) in b[..b.len() - 1].iter().enumerate() {
                a[shift + i] -= &(&lead * c);
            }
            while a.last().is_some_and(|c| c.is_zero()) {
                a.pop();
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}

fn sample_point(n: usize, attempt: i64) -> Vec<GaussianRational> {
    (0..n as i64)
        .map(|j| {
            let v = (j * 5 + attempt * 7 + 3) % 11 - 5;
            GaussianRational::from_integer(if v == 0 { 6 } else { v })
        })
        .collect()
}

/// True when `var` provably does not occur in the gcd of `items` (all over
/// the same variables, the first nonzero). The gcd divides the images at
/// any point and keeps its degree in `var` where `lc_var` of the first item
/// does not vanish, so a constant image gcd bounds that degree by zero.
fn absent_from_gcd_of(items: &[&MultiPoly], var: &str) -> bool {
    let Some(iv) = items[0].var_index(var) else {
        return true;
    };
    if items.iter().any(|p| !p.is_zero() && !p.depends_on(var)) {
        return true;
    }
    for attempt in 0..3 {
        let point = sample_point(items[0].nvars(), attempt);
        let first = specialize(items[0], iv, &point);
        if first.last().is_some_and(|c| c.is_zero()) {
            continue;
        }
        let mut g = first;
        for p in &items[1..] {
            let mut img = specialize(p, iv, &point);
            while img.last().is_some_and(|c| c.is_zero()) {
                img.pop();
            }
            g = univariate_gcd(g, img);
            if g.len() == 1 {
                return true;
            }
        }
        return g.len() == 1;
    }
    false
}

/// Content with respect to `var`: the GCD of the coefficients of `p` viewed as
/// a polynomial in `var`. Not normalized.
pub fn content_in(p: &MultiPoly, var: &str) -> MultiPoly {
    let mut acc = MultiPoly::zero(p.vars().clone());
    for c in p.coeffs_in(var) {
        if c.is_zero() {
            continue;
        }
        acc = gcd_rec(&acc, &c);
        if acc.is_constant() {
            return MultiPoly::one(p.vars().clone());
        }
    }
    acc
}

/// `p / content_in(p, var)`.
pub fn primitive_part(p: &MultiPoly, var: &str) -> MultiPoly {
    if p.is_zero() {
        return p.clone();
    }
    let c = content_in(p, var);
    p.div_exact(&c).expect("content divides")
}

fn trim(v: &mut Vec<MultiPoly>) {
    while v.last().is_some_and(MultiPoly::is_zero) {
        v.pop();
    }
}

/// Pseudo-remainder `prem(a, b)` in `var`: the remainder of
/// `lc(b)^(deg a − deg b + 1) · a` on division by `b`.
pub fn pseudo_remainder(a: &MultiPoly, b: &MultiPoly, var: &str) -> MultiPoly {
    let mut names: Vec<String> = MultiPoly::union_vars(a.vars(), b.vars()).to_vec();
    if !names.iter().any(|n| n == var) {
        names.push(var.to_string());
    }
    let vars: VarList = names.into();
    let a = a.align_to(&vars).expect("align");
    let b = b.align_to(&vars).expect("align");
    let mut r = a.coeffs_in(var);
    let d = b.coeffs_in(var);
    assert!(!d.is_empty(), "pseudo-remainder by zero");
    let db = d.len() - 1;
    let lb = d[db].clone();
    if r.len() <= db {
        return a;
    }
    let mut e = r.len() - db;
    while r.len() > db {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        for (j, dj) in d.iter().enumerate() {
            r[j + shift] = &r[j + shift] - &(&lr * dj);
        }
        trim(&mut r);
        e -= 1;
    }
    let scale = lb.pow(e as u32);
    let r = MultiPoly::from_coeffs_in(&vars, var, &r).expect("var present");
    &r * &scale
}

fn subresultant_primitive_gcd(a: &MultiPoly, b: &MultiPoly, var: &str) -> MultiPoly {
    let (mut a, mut b) = if a.degree_in(var) >= b.degree_in(var) {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    let one = MultiPoly::one(a.vars().clone());
    let mut g = one.clone();
    let mut h = one.clone();
    loop {
        let delta = a.degree_in(var).unwrap() - b.degree_in(var).unwrap();
        let r = pseudo_remainder(&a, &b, var);
        if r.is_zero() {
            return primitive_part(&b, var);
        }
        if r.degree_in(var) == Some(0) {
            return one;
        }
        a = b;
        let denom = &g * &h.pow(delta);
        b = r.div_exact(&denom).expect("subresultant division is exact");
        g = a.leading_coeff_in(var);
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g
                .pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant division is exact"),
        };
    }
}

/// `p / gcd(p, ∂p/∂var)`, normalized. Removes every repeated factor involving
/// `var`; factors free of `var` are divided out entirely.
pub fn square_free_part(p: &MultiPoly, var: &str) -> Result<MultiPoly, PolyError> {
    match p.degree_in(var) {
        None | Some(0) => Err(PolyError::DegreeZero { var: var.to_string() }),
        Some(_) => {
            let g = gcd(p, &p.derivative(var));
            Ok(p.div_exact(&g).expect("gcd divides").monic())
        }
    }
}

/// Radical of `p` over all of its variables: `p / gcd(p, ∂p/∂v₁, …)`.
pub fn square_free_full(p: &MultiPoly) -> MultiPoly {
    if p.is_constant() {
        return p.monic();
    }
    let mut g = p.clone();
    for v in p.used_vars() {
        g = gcd(&g, &p.derivative(&v));
        if g.is_constant() {
            return p.monic();
        }
    }
    p.div_exact(&g).expect("gcd divides").monic()
}

/// `p / gcd(p, ∂p/∂b …)` over the block variables `b`, normalized. Equals the
/// radical of `p` when every factor of `p` involves the block.
pub fn square_free_in_block(p: &MultiPoly, block: &[String]) -> MultiPoly {
    let mut g = p.clone();
    for v in block {
        if !p.depends_on(v) {
            continue;
        }
        g = gcd(&g, &p.derivative(v));
        if g.is_constant() {
            return p.monic();
        }
    }
    p.div_exact(&g).expect("gcd divides").monic()
}

/// True when `p` has a repeated factor of positive degree in the block.
pub fn has_square_factor_in(p: &MultiPoly, block: &[String]) -> bool {
    let mut g = p.clone();
    for v in block {
        if !p.depends_on(v) {
            continue;
        }
        g = gcd(&g, &p.derivative(v));
        if block.iter().all(|b| !g.depends_on(b)) {
            return false;
        }
    }
    block.iter().any(|b| g.depends_on(b))
}

/// Splits `p` by monomials in `block`: returns the coefficient polynomials
/// (free of the block) keyed by block exponent vector.
pub fn coefficients_in_block(p: &MultiPoly, block: &[String]) -> BTreeMap<Vec<u32>, MultiPoly> {
    let idx: Vec<Option<usize>> = block.iter().map(|b| p.var_index(b)).collect();
    let mut groups: BTreeMap<Vec<u32>, BTreeMap<Monomial, _>> = BTreeMap::new();
    for (m, c) in p.terms() {
        let key: Vec<u32> = idx.iter().map(|i| i.map_or(0, |i| m.0[i])).collect();
        let mut rest = m.clone();
        for i in idx.iter().flatten() {
            rest.0[*i] = 0;
        }
        groups.entry(key).or_default().insert(rest, c.clone());
    }
    groups
        .into_iter()
        .map(|(k, t)| (k, MultiPoly::from_parts(p.vars().clone(), t)))
        .collect()
}

/// GCD of the block-coefficients of `p`, normalized; 1 when they are coprime.
pub fn content_in_block(p: &MultiPoly, block: &[String]) -> MultiPoly {
    let coeffs = coefficients_in_block(p, block);
    gcd_many(coeffs.values()).unwrap_or_else(|| MultiPoly::zero(p.vars().clone()))
}

/// True when `p` is a nonzero constant.
pub fn is_unit(p: &MultiPoly) -> bool {
    p.is_constant() && !p.as_constant().is_some_and(|c| c.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(s, &["x", "y", "z"]).unwrap()
    }

    #[test]
    fn gcd_of_difference_of_squares() {
        assert_eq!(gcd(&p("x^2 - y^2"), &p("x - y")), p("x - y"));
    }

    #[test]
    fn coprime_gcd_is_one() {
        assert_eq!(gcd(&p("x"), &p("y")), p("1"));
    }

    #[test]
    fn gcd_with_zero_normalizes() {
        assert_eq!(gcd(&p("2*x + 4*y"), &p("0")), p("x + 2*y"));
    }

    #[test]
    fn gcd_counts_factor_multiplicities() {
        // min of multiplicities per factor
        let a = p("(x+y)^2*(x-y)");
        let b = p("(x+y)*(x-y)^2");
        let g = gcd(&a, &b);
        assert!(g.is_associate(&p("(x+y)*(x-y)")));
        assert!(a.div_exact(&g).is_some() && b.div_exact(&g).is_some());
    }

    #[test]
    fn gcd_with_content_factors() {
        let a = p("x^2*(z - y)*(z + 1)");
        let b = p("x*y*(z - y)^2");
        assert!(gcd(&a, &b).is_associate(&p("x*(z - y)")));
    }

    #[test]
    fn square_free_examples() {
        let sf = square_free_part(&p("(z-x)^2*(z-y)"), "z").unwrap();
        assert!(sf.is_associate(&p("(z-x)*(z-y)")));
        let q = p("z^2 + x*z - y");
        assert_eq!(square_free_part(&q, "z").unwrap(), q);
        assert_eq!(square_free_part(&p("z^5"), "z").unwrap(), p("z"));
        assert!(matches!(
            square_free_part(&p("x + 1"), "z"),
            Err(PolyError::DegreeZero { .. })
        ));
    }

    #[test]
    fn pseudo_remainder_basic() {
        // prem(x^2, 2x + 1) = 4·x^2 mod (2x+1) = 1
        let r = pseudo_remainder(&p("x^2"), &p("2*x + 1"), "x");
        assert_eq!(r, p("1"));
    }

    #[test]
    fn radical() {
        assert!(square_free_full(&p("(x - y)^2*(x + y)")).is_associate(&p("(x-y)*(x+y)")));
    }

    #[test]
    fn block_content() {
        let f = MultiPoly::parse("x*dy - x*dx", &["x", "y", "dx", "dy"]).unwrap();
        let block = vec!["dx".to_string(), "dy".to_string()];
        let c = content_in_block(&f, &block);
        assert_eq!(c, MultiPoly::parse("x", &["x"]).unwrap());
    }

    #[test]
    fn univariate_gcd_of_shared_root() {
        let g = |v: &[i64]| v.iter().map(|&c| GaussianRational::from_integer(c)).collect::<Vec<_>>();
        // (s - 1)(s - 2) and (s - 1)(s + 3)
        let d = univariate_gcd(g(&[2, -3, 1]), g(&[-3, 2, 1]));
        assert_eq!(d, g(&[-1, 1]));
        assert_eq!(univariate_gcd(g(&[1, 1]), g(&[2, 1])).len(), 1);
    }

    #[test]
    fn specialization_proves_absence() {
        let a = p("(x + y)*(z^2 + x)");
        let b = p("(x + y)*(z - y)");
        assert!(absent_from_gcd_of(&[&a, &b], "z"));
        assert!(!absent_from_gcd_of(&[&a, &b], "x"));
        assert_eq!(gcd(&a, &b), p("x + y"));
    }

    #[test]
    fn many_coprime_items() {
        let items = [p("x*y"), p("y*z"), p("x*z"), p("x + y + z")];
        assert_eq!(gcd_many(items.iter()), Some(p("1")));
        let items = [p("x*y"), p("x*y^2"), p("x^2*y + x*y*z")];
        assert_eq!(gcd_many(items.iter()), Some(p("x*y")));
    }

    #[test]
    fn block_square_free() {
        let f = MultiPoly::parse("(dx + x*dy)^2*(dx - dy)", &["x", "dx", "dy"]).unwrap();
        let block = vec!["dx".to_string(), "dy".to_string()];
        let r = square_free_in_block(&f, &block);
        assert_eq!(
            r,
            MultiPoly::parse("(dx + x*dy)*(dx - dy)", &["x", "dx", "dy"])
                .unwrap()
                .monic()
        );
    }
}
