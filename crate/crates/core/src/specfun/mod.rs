//! Floating-point special functions: Riemann and Hurwitz zeta, Dirichlet
//! beta, Catalan's and Euler's constants, polygamma, the weighted
//! `zeta_E` values and the Clausen function `Cl2`.
//!
//! Every evaluation returns an [`EvalResult`] whose `error_bound` covers the
//! truncation of the underlying series or asymptotic expansion. Rounding is
//! not included.

mod clausen;
mod zeta;

use serde::Serialize;

pub use clausen::{clausen_cl2, clausen_direct, reduce_angle, Cl2Method, DIRECT_TERMS};
pub use zeta::{
    catalan, dirichlet_beta, euler_gamma, hurwitz_zeta, polygamma, riemann_zeta, zeta_e_weighted,
    zeta_even, zeta_even_minus_one, zeta_minus_one, EM_CORRECTIONS, EM_HEAD,
};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalResult {
    pub value: f64,
    pub terms_used: u64,
    pub error_bound: f64,
}

impl EvalResult {
    pub fn new(value: f64, terms_used: u64, error_bound: f64) -> Self {
        debug_assert!(error_bound >= 0.0 && error_bound.is_finite());
        Self {
            value,
            terms_used,
            error_bound,
        }
    }

    pub fn exact(value: f64) -> Self {
        Self::new(value, 0, 0.0)
    }
}
