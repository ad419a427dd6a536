//! Log-trigonometric integral identities and the Clausen cross-check.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, FRAC_PI_6, LN_2, PI, TAU};

use rayon::prelude::*;
use serde::Serialize;

use super::quadrature::{quadrature, Integrand};
use super::{check_tolerance, Variant, VerificationReport};
use crate::catalog::{CatalogKey, Status};
use crate::error::{Error, Result};
use crate::specfun::{
    catalan, clausen_cl2, clausen_direct, polygamma, riemann_zeta, Cl2Method, EvalResult,
    DIRECT_TERMS,
};

/// Angles at which the parameterized identities are checked.
pub const THETA_GRID: [f64; 4] = [FRAC_PI_6, FRAC_PI_4, FRAC_PI_2, 3.0 * FRAC_PI_4];

/// Tolerance for the truncated direct `Cl2` sum, whose tail bound is `1/N`.
pub const DIRECT_TOLERANCE: f64 = 1e-6;

type Rhs = fn(f64) -> EvalResult;

/// A definite integral with a closed-form right-hand side.
#[derive(Debug, Clone, Copy)]
pub struct IntegralIdentity {
    pub id: &'static str,
    pub description: &'static str,
    pub integrand: Integrand,
    pub status: Status,
    /// Fixed interval for scalar identities; `None` means `[0, theta]` on
    /// [`THETA_GRID`].
    pub interval: Option<(f64, f64)>,
    rhs: Rhs,
    printed: Option<Rhs>,
}

fn cl2(theta: f64) -> EvalResult {
    clausen_cl2(theta, Cl2Method::Auto).expect("finite angle")
}

fn g() -> f64 {
    catalan().value
}

fn zeta3() -> f64 {
    riemann_zeta(3.0).expect("s = 3").value
}

/// Scales and shifts a `Cl2` value, keeping its error bound.
fn affine_cl2(theta: f64, scale: f64, shift: f64) -> EvalResult {
    let c = cl2(theta);
    EvalResult::new(
        scale * c.value + shift,
        c.terms_used,
        scale.abs() * c.error_bound,
    )
}

static IDENTITIES: &[IntegralIdentity] = &[
    IntegralIdentity {
        id: "INT_LOG_SIN_HALF_PI",
        description: "int_0^{pi/2} log sin x dx = -(pi/2) log 2",
        integrand: Integrand::LogSin,
        status: Status::AsPrinted,
        interval: Some((0.0, FRAC_PI_2)),
        rhs: |_| EvalResult::exact(-FRAC_PI_2 * LN_2),
        printed: None,
    },
    IntegralIdentity {
        id: "INT_LOG_TWO_SIN_HALF_PI",
        description: "int_0^pi log(2 sin(x/2)) dx = 0",
        integrand: Integrand::LogTwoSinHalf,
        status: Status::AsPrinted,
        interval: Some((0.0, PI)),
        rhs: |_| EvalResult::exact(0.0),
        printed: None,
    },
    IntegralIdentity {
        id: "INT_U_LOG_SIN",
        description: "int_0^{pi/4} u log sin u du = (35/128) zeta(3) - pi G/8 - (pi^2/32) log 2",
        integrand: Integrand::XLogSin,
        status: Status::AsPrinted,
        interval: Some((0.0, FRAC_PI_4)),
        rhs: |_| EvalResult::exact(35.0 / 128.0 * zeta3() - PI * g() / 8.0 - PI * PI / 32.0 * LN_2),
        printed: None,
    },
    IntegralIdentity {
        id: "INT_X2_LOG_TWO_SIN_HALF",
        description: "int_0^{pi/2} x^2 log(2 sin(x/2)) dx = (72 pi zeta(3) - 192 pi^2 G + psi_3(1/4) - psi_3(3/4))/768",
        integrand: Integrand::XSqLogTwoSinHalf,
        status: Status::AsPrinted,
        interval: Some((0.0, FRAC_PI_2)),
        rhs: |_| {
            let p1 = polygamma(3, 0.25).expect("z > 0");
            let p3 = polygamma(3, 0.75).expect("z > 0");
            let v = (72.0 * PI * zeta3() - 192.0 * PI * PI * g() + p1.value - p3.value) / 768.0;
            EvalResult::new(v, 0, (p1.error_bound + p3.error_bound) / 768.0)
        },
        printed: None,
    },
    IntegralIdentity {
        id: "INT_CL2_DEFINITION",
        description: "-int_0^1 log(2 sin(x/2)) dx = Cl2(1)",
        integrand: Integrand::LogTwoSinHalf,
        status: Status::AsPrinted,
        interval: Some((0.0, 1.0)),
        rhs: |_| {
            let c = clausen_cl2(1.0, Cl2Method::Accel).expect("finite angle");
            EvalResult::new(-c.value, c.terms_used, c.error_bound)
        },
        printed: None,
    },
    IntegralIdentity {
        id: "INT_LOG_SIN",
        description: "int_0^theta log sin x dx = -Cl2(2 theta)/2 - theta log 2",
        integrand: Integrand::LogSin,
        status: Status::AsPrinted,
        interval: None,
        rhs: |t| affine_cl2(2.0 * t, -0.5, -t * LN_2),
        printed: None,
    },
    IntegralIdentity {
        id: "INT_LOG_COS",
        description: "int_0^theta log|cos x| dx = Cl2(pi - 2 theta)/2 - theta log 2; printed with -Cl2/2",
        integrand: Integrand::LogAbsCos,
        status: Status::Corrected,
        interval: None,
        rhs: |t| affine_cl2(PI - 2.0 * t, 0.5, -t * LN_2),
        printed: Some(|t| affine_cl2(PI - 2.0 * t, -0.5, -t * LN_2)),
    },
    IntegralIdentity {
        id: "INT_LOG_ONE_PLUS_COS",
        description: "int_0^theta log(1 + cos x) dx = 2 Cl2(pi - theta) - theta log 2",
        integrand: Integrand::LogOnePlusCos,
        status: Status::AsPrinted,
        interval: None,
        rhs: |t| affine_cl2(PI - t, 2.0, -t * LN_2),
        printed: None,
    },
    IntegralIdentity {
        id: "INT_LOG_ONE_PLUS_SIN",
        description: "int_0^theta log(1 + sin x) dx = 2G - 2 Cl2(pi/2 + theta) - theta log 2",
        integrand: Integrand::LogOnePlusSin,
        status: Status::AsPrinted,
        interval: None,
        rhs: |t| affine_cl2(FRAC_PI_2 + t, -2.0, 2.0 * g() - t * LN_2),
        printed: None,
    },
];

pub fn integral_identities() -> &'static [IntegralIdentity] {
    IDENTITIES
}

impl IntegralIdentity {
    fn reports(&self, tolerance: f64) -> Result<Vec<VerificationReport>> {
        let points: Vec<(Option<f64>, f64, f64)> = match self.interval {
            Some((a, b)) => vec![(None, a, b)],
            None => THETA_GRID.iter().map(|&t| (Some(t), 0.0, t)).collect(),
        };
        let mut out = Vec::new();
        for (theta, a, b) in points {
            let q = quadrature(self.integrand, a, b)?;
            let arg = theta.unwrap_or(b);
            let mut variants = vec![(Variant::Corrected, (self.rhs)(arg))];
            if let Some(p) = self.printed {
                variants.push((Variant::Printed, p(arg)));
            }
            for (variant, rhs) in variants {
                out.push(VerificationReport::build(
                    CatalogKey::new(self.id),
                    theta,
                    q.value,
                    rhs.value,
                    q.evaluations,
                    tolerance,
                    q.error_estimate + rhs.error_bound,
                    variant,
                    self.status,
                ));
            }
        }
        Ok(out)
    }
}

/// Quadrature of the left-hand side against the `Cl2`-based right-hand
/// side; one report per angle (and per variant).
pub fn verify_integral_identity(id: &str, tolerance: f64) -> Result<Vec<VerificationReport>> {
    check_tolerance(tolerance)?;
    IDENTITIES
        .iter()
        .find(|i| i.id == id)
        .ok_or_else(|| Error::UnknownKey(id.to_string()))?
        .reports(tolerance)
}

pub fn verify_all_integrals(tolerance: f64) -> Result<Vec<VerificationReport>> {
    check_tolerance(tolerance)?;
    let nested: Vec<Vec<VerificationReport>> = IDENTITIES
        .par_iter()
        .map(|i| i.reports(tolerance))
        .collect::<Result<_>>()?;
    Ok(nested.into_iter().flatten().collect())
}

/// Grid agreement of the `Cl2` evaluation routes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClausenCrossCheck {
    /// Series methods: `lhs`/`rhs` are the two values at the worst angle.
    pub report: VerificationReport,
    pub worst_theta: f64,
    /// Largest gap between the direct sum and the accelerated value.
    pub direct_discrepancy: f64,
    pub direct_tolerance: f64,
    pub pass: bool,
}

const SERIES_METHODS: [Cl2Method; 4] = [
    Cl2Method::Accel,
    Cl2Method::Peeled,
    Cl2Method::Wzl,
    Cl2Method::Auto,
];

/// Maximum pairwise discrepancy of accel/peeled/wzl/auto on
/// `grid_points` angles spanning `[0.05, 2pi - 0.05]`, plus the direct sum
/// at [`DIRECT_TOLERANCE`].
pub fn cross_check_clausen(grid_points: usize, tolerance: f64) -> Result<ClausenCrossCheck> {
    if grid_points < 8 {
        return Err(Error::Domain(
            "cross-check grid needs at least 8 points".into(),
        ));
    }
    if !(tolerance.is_finite() && tolerance > 0.0) {
        return Err(Error::Domain(format!("bad tolerance {tolerance:e}")));
    }
    let span = TAU - 0.1;
    let rows: Vec<(f64, f64, f64, f64, f64)> = (0..grid_points)
        .into_par_iter()
        .map(|i| {
            let theta = 0.05 + span * i as f64 / (grid_points - 1) as f64;
            let vals: Vec<EvalResult> = SERIES_METHODS
                .iter()
                .map(|&m| clausen_cl2(theta, m).expect("finite angle"))
                .collect();
            let lo = vals.iter().map(|v| v.value).fold(f64::INFINITY, f64::min);
            let hi = vals
                .iter()
                .map(|v| v.value)
                .fold(f64::NEG_INFINITY, f64::max);
            let bound = vals.iter().map(|v| v.error_bound).fold(0.0, f64::max);
            let direct = clausen_direct(theta, DIRECT_TERMS).expect("finite angle");
            (theta, lo, hi, bound, (direct.value - vals[0].value).abs())
        })
        .collect();

    let worst = rows
        .iter()
        .copied()
        .max_by(|a, b| (a.2 - a.1).total_cmp(&(b.2 - b.1)))
        .expect("grid is non-empty");
    let direct_discrepancy = rows.iter().map(|r| r.4).fold(0.0, f64::max);
    let report = VerificationReport::build(
        CatalogKey::new("CL2_CROSS_CHECK"),
        Some(worst.0),
        worst.2,
        worst.1,
        grid_points as u64,
        tolerance,
        2.0 * worst.3,
        Variant::Corrected,
        Status::Representation,
    );
    let pass = report.pass && direct_discrepancy <= DIRECT_TOLERANCE;
    Ok(ClausenCrossCheck {
        worst_theta: worst.0,
        report,
        direct_discrepancy,
        direct_tolerance: DIRECT_TOLERANCE,
        pass,
    })
}
