//! Fixed-step leaf tracing on the surface `F = 0`.

use super::compiled::CompiledPoly;
use super::NumericError;
use crate::contact::ImplicitOde;
use crate::elimination::leviflat_membership;
use crate::poly::HermitianPoly;
use num_complex::Complex64;
use std::fmt::Write as _;

const CHART: [&str; 3] = ["x", "y", "p"];

#[derive(Clone, Debug, PartialEq)]
pub struct TraceOptions {
    pub step: f64,
    pub steps: usize,
    pub residual_bound: f64,
    /// Direction of real time in the complex `x`-line.
    pub theta: f64,
    /// Abort threshold for `|F_p|`.
    pub criminant_guard: f64,
}

impl Default for TraceOptions {
    fn default() -> Self {
        Self {
            step: 1e-3,
            steps: 10_000,
            residual_bound: 1e-6,
            theta: 0.0,
            criminant_guard: 1e-8,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LeafTrace {
    /// `(x, y, p)` triples.
    pub points: Vec<[Complex64; 3]>,
    /// `|F|` at each recorded point.
    pub residuals: Vec<f64>,
    pub step: f64,
    pub residual_max: f64,
}

impl LeafTrace {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x_re,x_im,y_re,y_im,p_re,p_im,residual\n");
        for (pt, r) in self.points.iter().zip(&self.residuals) {
            let _ = writeln!(
                out,
                "{:?},{:?},{:?},{:?},{:?},{:?},{:?}",
                pt[0].re, pt[0].im, pt[1].re, pt[1].im, pt[2].re, pt[2].im, r
            );
        }
        out
    }
}

struct Surface {
    f: CompiledPoly,
    fx: CompiledPoly,
    fy: CompiledPoly,
    fp: CompiledPoly,
}

impl Surface {
    fn new(ode: &ImplicitOde) -> Self {
        let f = ode.f();
        Self {
            f: CompiledPoly::new(f, &CHART),
            fx: CompiledPoly::new(&f.derivative("x"), &CHART),
            fy: CompiledPoly::new(&f.derivative("y"), &CHART),
            fp: CompiledPoly::new(&f.derivative("p"), &CHART),
        }
    }

    /// The lifted field divided by `F_p`, so that `x` advances at unit rate.
    fn velocity(&self, s: [Complex64; 3], dir: Complex64) -> Result<[Complex64; 3], f64> {
        let fp = self.fp.eval(&s);
        let fx = self.fx.eval(&s);
        let fy = self.fy.eval(&s);
        if fp.norm().is_nan() || fp.norm() == 0.0 {
            return Err(fp.norm());
        }
        Ok([dir, s[2] * dir, -(fx + s[2] * fy) / fp * dir])
    }
}

fn axpy(s: [Complex64; 3], h: f64, v: [Complex64; 3]) -> [Complex64; 3] {
    [s[0] + v[0] * h, s[1] + v[1] * h, s[2] + v[2] * h]
}

/// Integrates the leaf through `start` with classical RK4 along real time in
/// direction `e^{iθ}` of the `x`-line, projecting back to `F = 0` after
/// each step by one Newton correction in `p`.
pub fn trace_leaf(ode: &ImplicitOde, start: [Complex64; 3], options: &TraceOptions) -> Result<LeafTrace, NumericError> {
    let surface = Surface::new(ode);
    let r0 = surface.f.eval(&start).norm();
    if r0.is_nan() || r0 >= 1e-8 {
        return Err(NumericError::StartOffSurface { residual: r0 });
    }
    let dir = Complex64::from_polar(1.0, options.theta);
    let h = options.step;
    let mut state = start;
    let mut points = vec![start];
    let mut residuals = vec![r0];
    let mut residual_max = r0;
    for step in 1..=options.steps {
        let guard = |fp: f64| NumericError::NearCriminant { step, value: fp };
        let fp_here = surface.fp.eval(&state).norm();
        if fp_here < options.criminant_guard {
            return Err(guard(fp_here));
        }
        let k1 = surface.velocity(state, dir).map_err(guard)?;
        let k2 = surface.velocity(axpy(state, h / 2.0, k1), dir).map_err(guard)?;
        let k3 = surface.velocity(axpy(state, h / 2.0, k2), dir).map_err(guard)?;
        let k4 = surface.velocity(axpy(state, h, k3), dir).map_err(guard)?;
        let mut next = state;
        for i in 0..3 {
            next[i] += (k1[i] + k2[i] * 2.0 + k3[i] * 2.0 + k4[i]) * (h / 6.0);
        }
        let fp = surface.fp.eval(&next);
        if fp.norm() < options.criminant_guard {
            return Err(guard(fp.norm()));
        }
        next[2] -= surface.f.eval(&next) / fp;
        let residual = surface.f.eval(&next).norm();
        if residual.is_nan() || residual > options.residual_bound {
            return Err(NumericError::ResidualExceeded {
                residual,
                bound: options.residual_bound,
                step,
            });
        }
        residual_max = residual_max.max(residual);
        points.push(next);
        residuals.push(residual);
        state = next;
    }
    Ok(LeafTrace {
        points,
        residuals,
        step: h,
        residual_max,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct LeviflatReport {
    pub max_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub points: usize,
}

/// Evaluates the Levi-flat polynomial (in `x, y` and conjugates) along a
/// trace. The trace is assumed to be seeded on a leaf with real parameter.
pub fn leaf_in_leviflat(
    trace: &LeafTrace,
    levi: &HermitianPoly,
    tolerance: f64,
) -> Result<LeviflatReport, NumericError> {
    let mut max_residual: f64 = 0.0;
    for pt in &trace.points {
        let (residual, _) = leviflat_membership(levi, &[pt[0], pt[1]], tolerance)?;
        max_residual = max_residual.max(residual);
    }
    Ok(LeviflatReport {
        max_residual,
        tolerance,
        passed: max_residual < tolerance,
        points: trace.points.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn hyperbola_leaf() {
        let ode = ImplicitOde::parse("x*p + y").unwrap();
        let opts = TraceOptions {
            steps: 1000,
            ..TraceOptions::default()
        };
        let t = trace_leaf(&ode, [c(1.0), c(1.0), c(-1.0)], &opts).unwrap();
        assert_eq!(t.points.len(), 1001);
        for pt in &t.points {
            assert!((pt[0] * pt[1] - 1.0).norm() < 1e-6);
        }
        assert!((t.points[1000][0] - c(2.0)).norm() < 1e-9);
    }

    #[test]
    fn clairaut_slope_is_constant() {
        let ode = ImplicitOde::parse("y - x*p - p^2").unwrap();
        let start = [c(1.0), c(0.5 + 0.25), c(0.5)];
        let opts = TraceOptions {
            steps: 500,
            theta: 0.7,
            ..TraceOptions::default()
        };
        let t = trace_leaf(&ode, start, &opts).unwrap();
        for pt in &t.points {
            assert!((pt[2] - c(0.5)).norm() < 1e-9);
        }
    }

    #[test]
    fn zero_steps_and_bad_start() {
        let ode = ImplicitOde::parse("x*p + y").unwrap();
        let opts = TraceOptions {
            steps: 0,
            ..TraceOptions::default()
        };
        let t = trace_leaf(&ode, [c(1.0), c(1.0), c(-1.0)], &opts).unwrap();
        assert_eq!(t.points.len(), 1);
        assert!(matches!(
            trace_leaf(&ode, [c(1.0), c(1.0), c(1.0)], &opts),
            Err(NumericError::StartOffSurface { .. })
        ));
    }

    #[test]
    fn aborts_at_criminant() {
        // F_p = -x - 2p vanishes at x = 2 on the leaf p = -1
        let ode = ImplicitOde::parse("y - x*p - p^2").unwrap();
        let opts = TraceOptions {
            step: 0.01,
            steps: 300,
            ..TraceOptions::default()
        };
        let err = trace_leaf(&ode, [c(0.0), c(1.0), c(-1.0)], &opts).unwrap_err();
        assert!(matches!(err, NumericError::NearCriminant { .. }));
    }

    #[test]
    fn csv_header() {
        let ode = ImplicitOde::parse("x*p + y").unwrap();
        let opts = TraceOptions {
            steps: 2,
            ..TraceOptions::default()
        };
        let csv = trace_leaf(&ode, [c(1.0), c(1.0), c(-1.0)], &opts).unwrap().to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("x_re,x_im,y_re,y_im,p_re,p_im,residual"));
        assert_eq!(lines.count(), 3);
    }
}
