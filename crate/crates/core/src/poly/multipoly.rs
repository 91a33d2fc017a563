//! Sparse multivariate polynomials over ℚ(i).
//!
//! A [`MultiPoly`] carries its own ordered variable list. Terms are stored in a
//! `BTreeMap` keyed by [`Monomial`], whose ordering is graded lexicographic with
//! respect to that list, so the leading term is always the last map entry.
//! Binary operations on polynomials with different variable lists first align
//! both operands to the union of the lists (left operand's order first).

use super::gaussian::GaussianRational;
use super::PolyError;
use num_complex::Complex64;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

/// Shared, immutable variable list.
pub type VarList = Arc<[String]>;

pub fn var_list<S: AsRef<str>>(names: &[S]) -> VarList {
    names.iter().map(|s| s.as_ref().to_string()).collect()
}

/// Exponent vector ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug)]
pub struct MultiPoly {
    vars: VarList,
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl MultiPoly {
    pub fn zero(vars: VarList) -> Self {
        Self {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: VarList, c: GaussianRational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(p.vars.len()), c);
        }
        p
    }

    pub fn one(vars: VarList) -> Self {
        Self::constant(vars, GaussianRational::one())
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(vars: VarList, name: &str) -> Result<Self, PolyError> {
        let idx = index_of(&vars, name)?;
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        let mut p = Self::zero(vars);
        p.terms.insert(Monomial(e), GaussianRational::one());
        Ok(p)
    }

    /// Builds a polynomial from raw terms, dropping zeros and merging duplicates.
    pub fn from_terms<I>(vars: VarList, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, GaussianRational)>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), p.vars.len(), "exponent vector length");
            p.add_term(Monomial(e), &c);
        }
        p
    }

    pub fn vars(&self) -> &VarList {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The constant value when the polynomial has no variable dependence.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        if self.is_zero() {
            return Some(GaussianRational::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Variables that actually occur with a positive exponent.
    pub fn used_vars(&self) -> Vec<String> {
        (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|m| m.0[i] > 0))
            .map(|i| self.vars[i].clone())
            .collect()
    }

    pub fn depends_on(&self, name: &str) -> bool {
        match self.var_index(name) {
            Some(i) => self.terms.keys().any(|m| m.0[i] > 0),
            None => false,
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &GaussianRational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> GaussianRational {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Degree in `name`; `None` for the zero polynomial, `Some(0)` when the
    /// variable does not occur.
    pub fn degree_in(&self, name: &str) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        Some(match self.var_index(name) {
            Some(i) => self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0),
            None => 0,
        })
    }

    /// Total degree in the given block of variables, if every term has the same
    /// block degree.
    pub fn homogeneous_degree_in(&self, block: &[String]) -> Option<u32> {
        let idx: Vec<usize> = block.iter().filter_map(|b| self.var_index(b)).collect();
        let mut degs = self.terms.keys().map(|m| idx.iter().map(|&i| m.0[i]).sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    fn add_term(&mut self, m: Monomial, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn sub_term(&mut self, m: Monomial, c: &GaussianRational) {
        self.add_term(m, &-c);
    }

    /// Re-expresses the polynomial over `vars`, which must contain every used
    /// variable.
    pub fn align_to(&self, vars: &VarList) -> Result<MultiPoly, PolyError> {
        if Arc::ptr_eq(&self.vars, vars) || self.vars[..] == vars[..] {
            return Ok(Self {
                vars: vars.clone(),
                terms: self.terms.clone(),
            });
        }
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            match vars.iter().position(|w| w == v) {
                Some(j) => map.push(Some(j)),
                None if self.terms.keys().all(|m| m.0[i] == 0) => map.push(None),
                None => return Err(PolyError::UnknownVariable(v.clone())),
            }
        }
        let mut out = Self::zero(vars.clone());
        for (m, c) in &self.terms {
            let mut e = vec![0; vars.len()];
            for (i, &x) in m.0.iter().enumerate() {
                if let Some(j) = map[i] {
                    e[j] = x;
                }
            }
            out.add_term(Monomial(e), c);
        }
        Ok(out)
    }

    /// Extends the variable list with any names not already present.
    pub fn with_vars<S: AsRef<str>>(&self, extra: &[S]) -> MultiPoly {
        let mut names: Vec<String> = self.vars.to_vec();
        for e in extra {
            if !names.iter().any(|n| n == e.as_ref()) {
                names.push(e.as_ref().to_string());
            }
        }
        if names.len() == self.vars.len() {
            return self.clone();
        }
        self.align_to(&names.into()).expect("superset alignment")
    }

    /// Drops variables that do not occur.
    pub fn trim_vars(&self) -> MultiPoly {
        let used = self.used_vars();
        if used.len() == self.vars.len() {
            return self.clone();
        }
        self.align_to(&var_list(&used)).expect("used vars alignment")
    }

    pub(crate) fn union_vars(a: &VarList, b: &VarList) -> VarList {
        if Arc::ptr_eq(a, b) || a[..] == b[..] {
            return a.clone();
        }
        let mut names: Vec<String> = a.to_vec();
        for v in b.iter() {
            if !names.contains(v) {
                names.push(v.clone());
            }
        }
        names.into()
    }

    fn aligned_pair(&self, other: &MultiPoly) -> (MultiPoly, MultiPoly) {
        let vars = Self::union_vars(&self.vars, &other.vars);
        (
            self.align_to(&vars).expect("union alignment"),
            other.align_to(&vars).expect("union alignment"),
        )
    }

    fn same_vars(&self, other: &MultiPoly) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars[..] == other.vars[..]
    }

    pub fn scale(&self, c: &GaussianRational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(self.vars.clone());
        }
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = Self::one(self.vars.clone());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Normalizes the leading (graded-lex) coefficient to 1. Zero stays zero.
    pub fn monic(&self) -> MultiPoly {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    /// Formal partial derivative.
    pub fn derivative(&self, name: &str) -> MultiPoly {
        let Some(i) = self.var_index(name) else {
            return Self::zero(self.vars.clone());
        };
        let mut out = Self::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[i] -= 1;
            out.add_term(m2, &(c * &GaussianRational::from_integer(e as i64)));
        }
        out
    }

    /// Coefficients with respect to `name`, lowest degree first. Each
    /// coefficient keeps the full variable list but does not depend on `name`.
    pub fn coeffs_in(&self, name: &str) -> Vec<MultiPoly> {
        let Some(i) = self.var_index(name) else {
            return if self.is_zero() { vec![] } else { vec![self.clone()] };
        };
        let deg = self.degree_in(name).unwrap_or(0) as usize;
        let mut out = vec![Self::zero(self.vars.clone()); if self.is_zero() { 0 } else { deg + 1 }];
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            let e = std::mem::take(&mut m2.0[i]) as usize;
            out[e].terms.insert(m2, c.clone());
        }
        out
    }

    /// Inverse of [`coeffs_in`](Self::coeffs_in). All coefficients must share
    /// the variable list of `self`-style polynomials that contain `name`.
    pub fn from_coeffs_in(vars: &VarList, name: &str, coeffs: &[MultiPoly]) -> Result<MultiPoly, PolyError> {
        let i = index_of(vars, name)?;
        let mut out = Self::zero(vars.clone());
        for (d, c) in coeffs.iter().enumerate() {
            let c = c.align_to(vars)?;
            for (m, a) in c.terms {
                debug_assert_eq!(m.0[i], 0);
                let mut m2 = m;
                m2.0[i] += d as u32;
                out.add_term(m2, &a);
            }
        }
        Ok(out)
    }

    /// Leading coefficient with respect to `name` (a polynomial free of it).
    pub fn leading_coeff_in(&self, name: &str) -> MultiPoly {
        self.coeffs_in(name)
            .pop()
            .unwrap_or_else(|| Self::zero(self.vars.clone()))
    }

    /// Exact substitution of constants; unassigned variables stay symbolic.
    pub fn substitute(&self, values: &HashMap<String, GaussianRational>) -> MultiPoly {
        let idx: Vec<(usize, &GaussianRational)> = self
            .vars
            .iter()
            .enumerate()
            .filter_map(|(i, v)| values.get(v).map(|c| (i, c)))
            .collect();
        if idx.is_empty() {
            return self.clone();
        }
        let mut out = Self::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut m2 = m.clone();
            for &(i, val) in &idx {
                let e = std::mem::take(&mut m2.0[i]);
                if e > 0 {
                    coeff = &coeff * &val.pow(e);
                }
            }
            out.add_term(m2, &coeff);
        }
        out
    }

    /// Simultaneous substitution of polynomials for variables. The result lives
    /// over the union of the unreplaced variables and those of the images.
    pub fn compose(&self, images: &HashMap<String, MultiPoly>) -> MultiPoly {
        let mut names: Vec<String> = self.vars.iter().filter(|v| !images.contains_key(*v)).cloned().collect();
        let mut keys: Vec<&String> = images.keys().collect();
        keys.sort();
        for k in keys {
            for v in images[k].vars.iter() {
                if !names.contains(v) {
                    names.push(v.clone());
                }
            }
        }
        let vars: VarList = names.into();
        let imgs: Vec<Option<MultiPoly>> = self
            .vars
            .iter()
            .map(|v| images.get(v).map(|p| p.align_to(&vars).expect("image alignment")))
            .collect();
        let keep: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| {
                if images.contains_key(v) {
                    None
                } else {
                    vars.iter().position(|w| w == v)
                }
            })
            .collect();
        // cache powers of each image
        let mut pow_cache: Vec<Vec<MultiPoly>> = vec![Vec::new(); self.vars.len()];
        let mut out = Self::zero(vars.clone());
        for (m, c) in &self.terms {
            let mut e_keep = vec![0; vars.len()];
            let mut t = Self::zero(vars.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if let Some(j) = keep[i] {
                    e_keep[j] = e;
                }
            }
            t.terms.insert(Monomial(e_keep), c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if let Some(img) = &imgs[i] {
                    let cache = &mut pow_cache[i];
                    if cache.is_empty() {
                        cache.push(Self::one(vars.clone()));
                    }
                    while cache.len() <= e as usize {
                        let next = cache.last().unwrap() * img;
                        cache.push(next);
                    }
                    t = &t * &cache[e as usize];
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Renames variables; names absent from `map` keep their name. Merging two
    /// variables into one name is allowed.
    pub fn rename(&self, map: &HashMap<String, String>) -> MultiPoly {
        let renamed: Vec<String> = self
            .vars
            .iter()
            .map(|v| map.get(v).cloned().unwrap_or_else(|| v.clone()))
            .collect();
        let mut names: Vec<String> = Vec::new();
        for v in &renamed {
            if !names.contains(v) {
                names.push(v.clone());
            }
        }
        let vars: VarList = names.into();
        let pos: Vec<usize> = renamed
            .iter()
            .map(|v| vars.iter().position(|w| w == v).unwrap())
            .collect();
        let mut out = Self::zero(vars.clone());
        for (m, c) in &self.terms {
            let mut e = vec![0; vars.len()];
            for (i, &x) in m.0.iter().enumerate() {
                e[pos[i]] += x;
            }
            out.add_term(Monomial(e), c);
        }
        out
    }

    /// Conjugates every coefficient, leaving variables untouched.
    pub fn conj_coeffs(&self) -> MultiPoly {
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.conj())).collect(),
        }
    }

    /// Floating-point evaluation; every used variable must be assigned. Powers
    /// are tabulated once per variable so each term costs one product chain.
    pub fn eval_complex(&self, values: &HashMap<String, Complex64>) -> Result<Complex64, PolyError> {
        let mut tables: Vec<Vec<Complex64>> = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            let maxe = self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0) as usize;
            if maxe == 0 {
                tables.push(vec![Complex64::new(1.0, 0.0)]);
                continue;
            }
            let x = *values.get(v).ok_or_else(|| PolyError::UnassignedVariable(v.clone()))?;
            let mut t = Vec::with_capacity(maxe + 1);
            t.push(Complex64::new(1.0, 0.0));
            for k in 1..=maxe {
                t.push(t[k - 1] * x);
            }
            tables.push(t);
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut t = c.to_complex();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t *= tables[i][e as usize];
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Sum of absolute values of the evaluated terms: a natural scale for
    /// judging the size of [`eval_complex`](Self::eval_complex) residuals.
    pub fn eval_abs_scale(&self, values: &HashMap<String, Complex64>) -> Result<f64, PolyError> {
        let mut acc = 0.0;
        for (m, c) in &self.terms {
            let mut t = c.to_complex().norm();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    let x = values
                        .get(&self.vars[i])
                        .ok_or_else(|| PolyError::UnassignedVariable(self.vars[i].clone()))?;
                    t *= x.norm().powi(e as i32);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero(Self::union_vars(&self.vars, &divisor.vars)));
        }
        let (mut rem, d) = self.aligned_pair(divisor);
        if let Some(c) = d.as_constant() {
            return Some(rem.scale(&c.inv()));
        }
        let (dm, dc) = d.leading_term().map(|(m, c)| (m.clone(), c.inv())).unwrap();
        let mut quot = Self::zero(rem.vars.clone());
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(&dm)?;
            let qc = c * &dc;
            for (tm, tc) in &d.terms {
                rem.sub_term(tm.mul(&qm), &(tc * &qc));
            }
            quot.terms.insert(qm, qc);
        }
        Some(quot)
    }

    /// True when `self = c · other` for some nonzero constant `c`.
    pub fn is_associate(&self, other: &MultiPoly) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        if self.terms.len() != other.terms.len() {
            return false;
        }
        let (a, b) = self.aligned_pair(other);
        let (m, ca) = a.leading_term().unwrap();
        let Some(cb) = b.terms.get(m) else {
            return false;
        };
        let ratio = ca / cb;
        a == b.scale(&ratio)
    }

    pub(crate) fn from_parts(vars: VarList, terms: BTreeMap<Monomial, GaussianRational>) -> Self {
        Self { vars, terms }
    }
}

fn index_of(vars: &VarList, name: &str) -> Result<usize, PolyError> {
    vars.iter()
        .position(|v| v == name)
        .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.same_vars(other) {
            return self.terms == other.terms;
        }
        if self.terms.len() != other.terms.len() {
            return false;
        }
        let (a, b) = self.aligned_pair(other);
        a.terms == b.terms
    }
}

impl Eq for MultiPoly {}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        if !self.same_vars(rhs) {
            let (a, b) = self.aligned_pair(rhs);
            return &a + &b;
        }
        let (mut big, small) = if self.terms.len() >= rhs.terms.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c);
        }
        big
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        if !self.same_vars(rhs) {
            let (a, b) = self.aligned_pair(rhs);
            return &a - &b;
        }
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.sub_term(m.clone(), c);
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        if !self.same_vars(rhs) {
            let (a, b) = self.aligned_pair(rhs);
            return &a * &b;
        }
        let mut out = MultiPoly::zero(self.vars.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned_poly {
    ($tr:ident, $m:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned_poly!(Add, add);
forward_owned_poly!(Sub, sub);
forward_owned_poly!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> VarList {
        var_list(&["x", "y"])
    }

    #[test]
    fn grlex_leading_term() {
        let v = xy();
        let x = MultiPoly::var(v.clone(), "x").unwrap();
        let y = MultiPoly::var(v.clone(), "y").unwrap();
        let p = &(&x * &y) + &y.pow(2);
        // degree ties broken lexicographically: x*y > y^2
        assert_eq!(p.leading_term().unwrap().0 .0, vec![1, 1]);
        let q = &x + &y.pow(2);
        assert_eq!(q.leading_term().unwrap().0 .0, vec![0, 2]);
    }

    #[test]
    fn sub_self_is_empty() {
        let v = xy();
        let p = &MultiPoly::var(v.clone(), "x").unwrap() + &MultiPoly::one(v);
        assert!((&p - &p).is_zero());
        assert_eq!((&p - &p).num_terms(), 0);
    }

    #[test]
    fn equality_ignores_variable_order() {
        let a = MultiPoly::var(xy(), "x").unwrap();
        let b = MultiPoly::var(var_list(&["y", "x", "z"]), "x").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn derivative_of_monomial() {
        let v = xy();
        let x = MultiPoly::var(v.clone(), "x").unwrap();
        let y = MultiPoly::var(v.clone(), "y").unwrap();
        let p = &x.pow(3) * &y;
        let expected = (&x.pow(2) * &y).scale(&3.into());
        assert_eq!(p.derivative("x"), expected);
        assert!(MultiPoly::constant(v, 7.into()).derivative("x").is_zero());
    }

    #[test]
    fn coeff_round_trip() {
        let v = xy();
        let x = MultiPoly::var(v.clone(), "x").unwrap();
        let y = MultiPoly::var(v.clone(), "y").unwrap();
        let p = &(&x.pow(2) * &y) + &(&x - &y.pow(3));
        let cs = p.coeffs_in("x");
        assert_eq!(cs.len(), 3);
        assert_eq!(MultiPoly::from_coeffs_in(&v, "x", &cs).unwrap(), p);
    }

    #[test]
    fn exact_division() {
        let v = xy();
        let x = MultiPoly::var(v.clone(), "x").unwrap();
        let y = MultiPoly::var(v.clone(), "y").unwrap();
        let a = &x + &y;
        let b = &x - &y;
        assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        assert_eq!((&a * &b).div_exact(&x), None);
    }

    #[test]
    fn compose_is_simultaneous() {
        let v = xy();
        let x = MultiPoly::var(v.clone(), "x").unwrap();
        let y = MultiPoly::var(v.clone(), "y").unwrap();
        let p = &x - &y;
        let swap: HashMap<String, MultiPoly> = [("x".to_string(), y.clone()), ("y".to_string(), x.clone())].into();
        assert_eq!(p.compose(&swap), &y - &x);
    }
}
