//! Exact polynomial arithmetic over the Gaussian rationals.

mod gaussian;
mod gcd;
mod hermitian;
mod multipoly;
mod parse;
mod resultant;

pub use gaussian::GaussianRational;
pub use gcd::{
    coefficients_in_block, content_in, content_in_block, gcd, gcd_many, has_square_factor_in, is_unit, primitive_part,
    pseudo_remainder, square_free_full, square_free_in_block, square_free_part,
};
pub use hermitian::{bar_name, bar_pairing, conj_swap, HermitianPoly, BAR_SUFFIX};
pub use multipoly::{var_list, Monomial, MultiPoly, VarList};
pub use parse::{line_col, parse_poly, scan_identifiers};
pub(crate) use resultant::resultant_any;
pub use resultant::{determinant, discriminant_in, resultant, sylvester_matrix};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("syntax error at offset {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown identifier '{name}' at offset {pos}")]
    UnknownIdentifier { name: String, pos: usize },
    #[error("variable '{0}' is not in the variable list")]
    UnknownVariable(String),
    #[error("variable '{0}' has no assigned value")]
    UnassignedVariable(String),
    #[error("'{0}' is reserved for the imaginary unit")]
    ReservedName(String),
    #[error("polynomial has degree zero in '{var}'")]
    DegreeZero { var: String },
    #[error("polynomial has degree {degree} in '{var}', need at least {required}")]
    DegreeTooSmall { var: String, degree: u32, required: u32 },
    #[error("pairing is not an involution: {0}")]
    NotInvolution(String),
    #[error("polynomial is not invariant under conjugate-swap")]
    NotReal,
    #[error("exact division failed")]
    NotDivisible,
    #[error("expected {expected} coordinates, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// `Σ_j ∂p/∂x_j · dx_j` for the given coordinate / differential name pairs.
pub fn differential(p: &MultiPoly, coords: &[String], diffs: &[String]) -> MultiPoly {
    let mut out = p.with_vars(diffs);
    out = MultiPoly::zero(out.vars().clone());
    for (x, dx) in coords.iter().zip(diffs) {
        let d = p.derivative(x);
        if d.is_zero() {
            continue;
        }
        let dxp = MultiPoly::var(out.vars().clone(), dx).expect("differential present");
        out = &out + &(&d * &dxp);
    }
    out
}
