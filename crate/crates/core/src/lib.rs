//! Exact and floating-point machinery for series identities built on
//! `zeta(2n)`, the Clausen function `Cl2`, Dirichlet beta and Euler numbers.
//!
//! - [`exact`]: Bernoulli and Euler numbers, binomials, exact `zeta(2n)`.
//! - [`specfun`]: Hurwitz/Riemann zeta, beta, polygamma, `Cl2`.
//! - [`catalog`]: the identity registry with rigorous tail bounds.
//! - [`verifier`]: tolerance-driven checks, quadrature, exact lemmas.
//! - [`convergence`]: terms and time each identity needs.

pub mod catalog;
pub mod convergence;
pub mod error;
pub mod exact;
pub mod specfun;
pub mod sum;
pub mod verifier;

pub use catalog::{CatalogKey, ClosedForm, IdentitySummary, Instance, ParamDomain, Status, Target};
pub use convergence::{CompareTarget, ConvergenceProfile, ExportFormat};
pub use error::{Error, Result};
pub use exact::{PiPolynomial, PiPower, Rational, TrigFn};
pub use specfun::{Cl2Method, EvalResult};
pub use verifier::{Integrand, Outcome, QuadratureResult, Variant, VerificationReport, Verifier};
