//! Tolerance-driven verification of the catalog, exact checks of the
//! binomial lemmas, and quadrature checks of the integral identities.

mod integrals;
mod quadrature;

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{self, CatalogKey, Instance, Status};
use crate::error::{Error, Result};
use crate::exact::{binomial, Rational};

pub use integrals::{
    cross_check_clausen, integral_identities, verify_all_integrals, verify_integral_identity,
    ClausenCrossCheck, IntegralIdentity, DIRECT_TOLERANCE, THETA_GRID,
};
pub use quadrature::{quadrature, tanh_sinh, Integrand, QuadratureResult};

/// Default cap on the number of summed terms.
pub const MAX_TERMS: u64 = 1_000_000;
pub const MIN_TOLERANCE: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Printed,
    Corrected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    /// A printed right-hand side known to be wrong, failing as expected.
    ExpectedDiscrepancy,
    Inconclusive,
}

impl Outcome {
    pub fn name(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::ExpectedDiscrepancy => "expected-discrepancy",
            Outcome::Inconclusive => "inconclusive",
        }
    }

    fn of(pass: bool, variant: Variant) -> Self {
        match (pass, variant) {
            (true, _) => Outcome::Pass,
            (false, Variant::Printed) => Outcome::ExpectedDiscrepancy,
            (false, Variant::Corrected) => Outcome::Fail,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub key: CatalogKey,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta: Option<f64>,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub n_terms: u64,
    pub tolerance: f64,
    pub variant: Variant,
    pub pass: bool,
    pub status: Status,
    pub error_bound: f64,
    pub outcome: Outcome,
}

impl VerificationReport {
    /// `pass = abs_err <= tolerance + error_bound`.
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn build(
        key: CatalogKey,
        theta: Option<f64>,
        lhs: f64,
        rhs: f64,
        n_terms: u64,
        tolerance: f64,
        error_bound: f64,
        variant: Variant,
        status: Status,
    ) -> Self {
        let abs_err = (lhs - rhs).abs();
        let rel_err = if rhs == 0.0 {
            abs_err
        } else {
            abs_err / rhs.abs()
        };
        let pass = abs_err <= tolerance + error_bound;
        Self {
            key,
            theta,
            lhs,
            rhs,
            abs_err,
            rel_err,
            n_terms,
            tolerance,
            variant,
            pass,
            status,
            error_bound,
            outcome: Outcome::of(pass, variant),
        }
    }

    fn inconclusive(mut self) -> Self {
        self.pass = false;
        self.outcome = Outcome::Inconclusive;
        self
    }
}

fn check_tolerance(tolerance: f64) -> Result<()> {
    if !(tolerance.is_finite() && tolerance >= MIN_TOLERANCE) {
        return Err(Error::Domain(format!(
            "tolerance must be at least {MIN_TOLERANCE:e}, got {tolerance:e}"
        )));
    }
    Ok(())
}

/// Runs catalog checks with a configurable term cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verifier {
    pub max_terms: u64,
}

impl Default for Verifier {
    fn default() -> Self {
        Self {
            max_terms: MAX_TERMS,
        }
    }
}

impl Verifier {
    pub fn with_max_terms(max_terms: u64) -> Self {
        Self { max_terms }
    }

    /// Verifies one key: sums to the least `N` whose tail bound is at most
    /// `tolerance / 2`, then compares with each closed-form variant.
    ///
    /// Entries with a `zeta(3)` assembly are compared on the assembled value
    /// against `riemann_zeta(3)`.
    pub fn verify(&self, key: &CatalogKey, tolerance: f64) -> Result<Vec<VerificationReport>> {
        check_tolerance(tolerance)?;
        let inst = Instance::new(key)?;
        let target = 0.5 * tolerance / inst.error_gain();
        let n = inst.terms_for_tail(target, self.max_terms)?;
        Ok(self.reports(&inst, n, tolerance))
    }

    fn reports(&self, inst: &Instance, n: u64, tolerance: f64) -> Vec<VerificationReport> {
        let sum = inst.assembled_sum(n).expect("n >= start_index");
        let status = inst.descriptor.status;
        let report = |rhs: f64, variant| {
            VerificationReport::build(
                inst.key.clone(),
                None,
                sum.value,
                rhs,
                sum.terms_used,
                tolerance,
                sum.error_bound,
                variant,
                status,
            )
        };
        let mut out = vec![report(inst.assembled_target(), Variant::Corrected)];
        if let Some(printed) = inst.printed_form() {
            out.push(report(printed.value(), Variant::Printed));
        }
        out
    }

    /// Like [`Verifier::verify`], but an exhausted cap becomes an
    /// `inconclusive` report summed at the cap.
    pub fn verify_or_report(
        &self,
        key: &CatalogKey,
        tolerance: f64,
    ) -> Result<Vec<VerificationReport>> {
        match self.verify(key, tolerance) {
            Err(Error::Inconclusive { .. }) => {
                let inst = Instance::new(key)?;
                let n = self.max_terms.max(inst.start_index());
                Ok(self
                    .reports(&inst, n, tolerance)
                    .into_iter()
                    .map(VerificationReport::inconclusive)
                    .collect())
            }
            other => other,
        }
    }

    /// Every scalar identity and every family member with parameter up to
    /// `param_limit`, in registry order. Entries run concurrently.
    pub fn verify_all(&self, tolerance: f64, param_limit: u32) -> Result<Vec<VerificationReport>> {
        check_tolerance(tolerance)?;
        if param_limit < 1 {
            return Err(Error::Domain("param_limit must be at least 1".into()));
        }
        let keys: Vec<CatalogKey> = catalog::registry()
            .iter()
            .flat_map(|d| d.keys(param_limit))
            .collect();
        let nested: Vec<Vec<VerificationReport>> = keys
            .par_iter()
            .map(|k| self.verify_or_report(k, tolerance))
            .collect::<Result<_>>()?;
        Ok(nested.into_iter().flatten().collect())
    }
}

pub fn verify(key: &CatalogKey, tolerance: f64) -> Result<Vec<VerificationReport>> {
    Verifier::default().verify(key, tolerance)
}

pub fn verify_all(tolerance: f64, param_limit: u32) -> Result<Vec<VerificationReport>> {
    Verifier::default().verify_all(tolerance, param_limit)
}

/// `C(2n,2j) - C(2n+1,2j+1)/(2n+1) = (2j/(2j+1)) C(2n,2j)` for
/// `1 <= n <= n_max`, `1 <= j <= j_max`, in exact arithmetic.
pub fn check_binomial_identity(n_max: u64, j_max: u64) -> bool {
    (1..=n_max).all(|n| {
        (1..=j_max).all(|j| {
            let c = Rational::from_integer(binomial(2 * n, 2 * j));
            let c1 = Rational::from_integer(binomial(2 * n + 1, 2 * j + 1));
            let lhs = &c - c1 / Rational::from_integer((2 * n + 1).into());
            let rhs = c * Rational::new((2 * j).into(), (2 * j + 1).into());
            lhs == rhs
        })
    })
}

/// `1/(2k-1) - 1/(2k) = 1/(2k(2k-1))` for `1 <= k <= k_max`, exactly.
pub fn check_reciprocal_identity(k_max: u64) -> bool {
    (1..=k_max).all(|k| {
        let lhs =
            Rational::new(1.into(), (2 * k - 1).into()) - Rational::new(1.into(), (2 * k).into());
        lhs == Rational::new(1.into(), (2 * k * (2 * k - 1)).into())
    })
}
