//! Tanh-sinh quadrature for the log-trigonometric integrands.

use std::cell::Cell;
use std::f64::consts::{FRAC_PI_2, LN_2, PI, TAU};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sum::CompensatedSum;

/// Abscissae beyond this `t` carry weights below 1e-60.
const T_MAX: f64 = 4.5;
const MIN_LEVEL: u32 = 3;
const MAX_LEVEL: u32 = 9;
const LEVEL_TARGET: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: u64,
}

/// Registered integrands, each with integrable log singularities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Integrand {
    LogSin,
    LogAbsCos,
    LogOnePlusSin,
    LogOnePlusCos,
    LogTwoSinHalf,
    XLogSin,
    XSqLogTwoSinHalf,
}

impl Integrand {
    pub const ALL: [Integrand; 7] = [
        Integrand::LogSin,
        Integrand::LogAbsCos,
        Integrand::LogOnePlusSin,
        Integrand::LogOnePlusCos,
        Integrand::LogTwoSinHalf,
        Integrand::XLogSin,
        Integrand::XSqLogTwoSinHalf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Integrand::LogSin => "log-sin",
            Integrand::LogAbsCos => "log-abs-cos",
            Integrand::LogOnePlusSin => "log-one-plus-sin",
            Integrand::LogOnePlusCos => "log-one-plus-cos",
            Integrand::LogTwoSinHalf => "log-two-sin-half",
            Integrand::XLogSin => "x-log-sin",
            Integrand::XSqLogTwoSinHalf => "x2-log-two-sin-half",
        }
    }

    pub fn eval(self, x: f64) -> f64 {
        match self {
            Integrand::LogSin => x.sin().abs().ln(),
            Integrand::LogAbsCos => x.cos().abs().ln(),
            Integrand::LogOnePlusSin => x.sin().ln_1p(),
            Integrand::LogOnePlusCos => x.cos().ln_1p(),
            Integrand::LogTwoSinHalf => (0.5 * x).sin().abs().ln() + LN_2,
            Integrand::XLogSin => x * x.sin().abs().ln(),
            Integrand::XSqLogTwoSinHalf => x * x * ((0.5 * x).sin().abs().ln() + LN_2),
        }
    }

    /// `(period, phase)` of the singular set `phase + k period`.
    fn singular_lattice(self) -> (f64, f64) {
        match self {
            Integrand::LogSin | Integrand::XLogSin => (PI, 0.0),
            Integrand::LogAbsCos => (PI, FRAC_PI_2),
            Integrand::LogOnePlusSin => (TAU, 3.0 * FRAC_PI_2),
            Integrand::LogOnePlusCos => (TAU, PI),
            Integrand::LogTwoSinHalf | Integrand::XSqLogTwoSinHalf => (TAU, 0.0),
        }
    }

    /// Singular points strictly inside `(a, b)`.
    fn interior_singularities(self, a: f64, b: f64) -> Vec<f64> {
        let (period, phase) = self.singular_lattice();
        let mut k = ((a - phase) / period).floor();
        let mut out = Vec::new();
        loop {
            let p = phase + k * period;
            if p >= b {
                break;
            }
            if p > a {
                out.push(p);
            }
            k += 1.0;
        }
        out
    }
}

impl fmt::Display for Integrand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Integrand {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Integrand::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::UnknownIntegrand(s.to_string()))
    }
}

/// Integrates a registered integrand over `[lower, upper]`, splitting at
/// interior singular points.
pub fn quadrature(integrand: Integrand, lower: f64, upper: f64) -> Result<QuadratureResult> {
    if !lower.is_finite() || !upper.is_finite() {
        return Err(Error::NonFinite);
    }
    if lower >= upper {
        return Err(Error::Domain(format!(
            "quadrature needs lower < upper, got [{lower}, {upper}]"
        )));
    }
    let mut cuts = vec![lower];
    cuts.extend(integrand.interior_singularities(lower, upper));
    cuts.push(upper);

    let mut value = CompensatedSum::new();
    let mut error = 0.0;
    let mut evaluations = 0;
    for w in cuts.windows(2) {
        let r = tanh_sinh(|x| integrand.eval(x), w[0], w[1]);
        value.add(r.value);
        error += r.error_estimate;
        evaluations += r.evaluations;
    }
    Ok(QuadratureResult {
        value: value.value(),
        error_estimate: error,
        evaluations,
    })
}

/// Tanh-sinh rule on `[a, b]`; points where `f` is not finite are skipped.
/// The error estimate is the difference between the last two levels.
pub fn tanh_sinh(f: impl Fn(f64) -> f64, a: f64, b: f64) -> QuadratureResult {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let evaluations = Cell::new(0u64);

    // Contribution of the abscissae at +-t.
    let pair = |t: f64| -> f64 {
        let u = FRAC_PI_2 * t.sinh();
        let w = FRAC_PI_2 * t.cosh() / u.cosh().powi(2);
        // Distance to the endpoint, 1 - tanh(u), without cancellation.
        let d = h * 2.0 / (1.0 + (2.0 * u).exp());
        let mut s = 0.0;
        for x in [a + d, b - d] {
            evaluations.set(evaluations.get() + 1);
            let y = f(x);
            if y.is_finite() {
                s += y;
            }
        }
        w * s
    };

    let mut sum = CompensatedSum::new();
    let centre = f(c);
    if centre.is_finite() {
        sum.add(FRAC_PI_2 * centre);
    }
    let mut t = 1.0;
    while t <= T_MAX {
        sum.add(pair(t));
        t += 1.0;
    }
    evaluations.set(evaluations.get() + 1);
    let mut step = 1.0;
    let mut estimate = h * step * sum.value();
    let mut error = f64::INFINITY;

    for level in 1..=MAX_LEVEL {
        step *= 0.5;
        let mut t = step;
        while t <= T_MAX {
            sum.add(pair(t));
            t += 2.0 * step;
        }
        let next = h * step * sum.value();
        error = (next - estimate).abs();
        estimate = next;
        if level >= MIN_LEVEL && error <= LEVEL_TARGET * estimate.abs().max(1.0) {
            break;
        }
    }
    QuadratureResult {
        value: estimate,
        error_estimate: error,
        evaluations: evaluations.get(),
    }
}
