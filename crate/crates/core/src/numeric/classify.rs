//! Linearization of the lifted field at a singular point of `S`.

use super::compiled::CompiledPoly;
use super::NumericError;
use crate::contact::{lifted_field, ImplicitOde};
use num_complex::Complex64;
use serde::Serialize;

const CHART: [&str; 3] = ["x", "y", "p"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    SaddleWithFirstIntegralCandidate,
    NonReduced,
    Other,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::SaddleWithFirstIntegralCandidate => "saddle_with_first_integral_candidate",
            Verdict::NonReduced => "non_reduced",
            Verdict::Other => "other",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SingularityReport {
    pub location: [Complex64; 3],
    /// Chart coordinates used, by name.
    pub chart: [&'static str; 2],
    /// `λ₁` has the smaller modulus.
    pub eigenvalues: [Complex64; 2],
    /// `λ₂ / λ₁`; `None` when `λ₁` is zero.
    pub ratio: Option<Complex64>,
    pub verdict: Verdict,
    /// `(p, q)` with `λ₂/λ₁ ≈ −p/q`, `q > 0`, `gcd(p, q) = 1`.
    pub rational_approx: Option<(i64, i64)>,
}

/// Best rational approximation of `x` by continued-fraction convergents
/// with denominator at most `max_denominator`.
pub fn continued_fraction(x: f64, max_denominator: u64) -> (i64, i64) {
    let (mut h0, mut h1) = (0i64, 1i64);
    let (mut k0, mut k1) = (1i64, 0i64);
    let mut r = x;
    for _ in 0..64 {
        let a = r.floor();
        let ai = a as i64;
        let h2 = ai.saturating_mul(h1).saturating_add(h0);
        let k2 = ai.saturating_mul(k1).saturating_add(k0);
        if k2 as u64 > max_denominator {
            break;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = r - a;
        if frac.abs() < 1e-12 {
            break;
        }
        r = 1.0 / frac;
    }
    (h1, k1)
}

fn eigenvalues_2x2(m: [[Complex64; 2]; 2]) -> [Complex64; 2] {
    let half_tr = (m[0][0] + m[1][1]) / 2.0;
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    let disc = (half_tr * half_tr - det).sqrt();
    let (a, b) = (half_tr + disc, half_tr - disc);
    if a.norm() <= b.norm() {
        [a, b]
    } else {
        [b, a]
    }
}

/// Classifies the singular point of the lifted field at `point`.
///
/// The surface is charted by projecting along the coordinate with the
/// largest `|∂F|`; the field's Jacobian in that chart gives `λ₁, λ₂`. All
/// thresholds are relative, so multiplying `F` by a constant changes nothing.
pub fn classify_singularity(
    ode: &ImplicitOde,
    point: [Complex64; 3],
    tol: f64,
    max_denominator: u64,
) -> Result<SingularityReport, NumericError> {
    let f = ode.f();
    let fc = CompiledPoly::new(f, &CHART);
    let residual = fc.eval(&point).norm();
    if residual > tol * fc.abs_scale(&point).max(f64::MIN_POSITIVE) && residual > 0.0 {
        return Err(NumericError::PointOffSurface { residual });
    }
    let field = lifted_field(ode);
    let comps = [&field.vx, &field.vy, &field.vp];
    let v: Vec<CompiledPoly> = comps.iter().map(|c| CompiledPoly::new(c, &CHART)).collect();
    let v_norm = v.iter().map(|c| c.eval(&point).norm()).fold(0.0, f64::max);
    let v_scale = v.iter().map(|c| c.abs_scale(&point)).fold(0.0, f64::max);
    if v_norm > tol * v_scale {
        return Err(NumericError::NotSingular { norm: v_norm });
    }

    let grad: Vec<CompiledPoly> = CHART
        .iter()
        .map(|x| CompiledPoly::new(&f.derivative(x), &CHART))
        .collect();
    let g: Vec<Complex64> = grad.iter().map(|c| c.eval(&point)).collect();
    let g_norm = g.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let g_scale = grad.iter().map(|c| c.abs_scale(&point)).fold(0.0, f64::max);
    if g_norm == 0.0 || g_norm <= tol * g_scale {
        return Err(NumericError::DegenerateChart { norm: g_norm });
    }
    let m = (0..3)
        .max_by(|&a, &b| g[a].norm().partial_cmp(&g[b].norm()).unwrap().then(b.cmp(&a)))
        .unwrap();
    let chart_idx: Vec<usize> = (0..3).filter(|&i| i != m).collect();
    // dependent coordinate x_m = h(u), ∂h/∂u_b = −F_{u_b} / F_{x_m}
    let dh: Vec<Complex64> = chart_idx.iter().map(|&b| -g[b] / g[m]).collect();

    let mut jac = [[Complex64::new(0.0, 0.0); 2]; 2];
    for (ra, &a) in chart_idx.iter().enumerate() {
        let dv: Vec<Complex64> = CHART
            .iter()
            .map(|x| CompiledPoly::new(&comps[a].derivative(x), &CHART).eval(&point))
            .collect();
        for (cb, &b) in chart_idx.iter().enumerate() {
            jac[ra][cb] = dv[b] + dv[m] * dh[cb];
        }
    }
    let eigenvalues = eigenvalues_2x2(jac);
    let [l1, l2] = eigenvalues;
    let jac_scale = jac.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max);
    let chart = [CHART[chart_idx[0]], CHART[chart_idx[1]]];

    if jac_scale == 0.0 || l1.norm() <= tol * jac_scale {
        return Ok(SingularityReport {
            location: point,
            chart,
            eigenvalues,
            ratio: None,
            verdict: Verdict::NonReduced,
            rational_approx: None,
        });
    }
    let ratio = l2 / l1;
    let mut rational_approx = None;
    if ratio.im.abs() <= tol * ratio.norm() {
        let (p, q) = continued_fraction(-ratio.re, max_denominator);
        if q > 0 && (p as f64 / q as f64 + ratio.re).abs() <= tol * ratio.norm().max(1.0) {
            rational_approx = Some((p, q));
        }
    }
    let verdict = match rational_approx {
        Some((p, _)) if p > 0 => Verdict::SaddleWithFirstIntegralCandidate,
        _ => Verdict::Other,
    };
    Ok(SingularityReport {
        location: point,
        chart,
        eigenvalues,
        ratio: Some(ratio),
        verdict,
        rational_approx,
    })
}
