//! Floating-point evidence: root finding, leaf tracing, and singularity
//! classification of lifted fields.

pub mod classify;
mod compiled;
pub mod roots;
pub mod trace;

pub use classify::{classify_singularity, SingularityReport, Verdict};
pub use roots::{cluster_roots, polynomial_roots};
pub use trace::{leaf_in_leviflat, trace_leaf, LeafTrace, LeviflatReport, TraceOptions};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericError {
    #[error("root finder did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("start point is off the surface: |F| = {residual:e}")]
    StartOffSurface { residual: f64 },
    #[error("trace residual {residual:e} exceeds bound {bound:e} at step {step}")]
    ResidualExceeded { residual: f64, bound: f64, step: usize },
    #[error("trace reached the criminant at step {step}: |F_p| = {value:e}")]
    NearCriminant { step: usize, value: f64 },
    #[error("point is not a singularity of the lifted field: |V| = {norm:e}")]
    NotSingular { norm: f64 },
    #[error("point is off the surface: |F| = {residual:e}")]
    PointOffSurface { residual: f64 },
    #[error("surface is singular at the point (|grad F| = {norm:e}); not classified")]
    DegenerateChart { norm: f64 },
    #[error("evaluation is not real: imaginary part {imag:e} against scale {scale:e}")]
    NonReal { imag: f64, scale: f64 },
    #[error(transparent)]
    Poly(#[from] crate::poly::PolyError),
}
