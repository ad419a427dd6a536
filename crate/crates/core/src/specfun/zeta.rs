use std::f64::consts::PI;
use std::sync::OnceLock;

use super::EvalResult;
use crate::error::{Error, Result};
use crate::exact::{self, rational_to_f64, Rational};
use crate::sum::CompensatedSum;

/// Terms summed directly before the Euler–Maclaurin tail takes over.
pub const EM_HEAD: u64 = 20;
/// Bernoulli correction terms in the Euler–Maclaurin tail.
pub const EM_CORRECTIONS: usize = 10;

/// Largest `n` for which `zeta(2n)` is taken from the exact closed form.
/// Beyond it `zeta(2n) - 1 < 2^-128` and the nearest double is 1.
const EXACT_EVEN_LIMIT: u32 = 64;

/// `B_{2j} / (2j)!` for `j = 0..=EM_CORRECTIONS + 1`.
fn bernoulli_over_factorial() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (0..=EM_CORRECTIONS + 1)
            .map(|j| {
                let b = exact::bernoulli(2 * j)
                    / Rational::from_integer(exact::factorial(2 * j as u64));
                rational_to_f64(&b)
            })
            .collect()
    })
}

fn check_finite(x: f64) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite)
    }
}

/// Hurwitz zeta `zeta(s, a) = sum_{n>=0} (n + a)^-s` for `s > 1`, `a > 0`.
pub fn hurwitz_zeta(s: f64, a: f64) -> Result<EvalResult> {
    check_finite(s)?;
    check_finite(a)?;
    if s <= 1.0 {
        return Err(Error::Domain(format!("hurwitz_zeta needs s > 1, got {s}")));
    }
    if a <= 0.0 {
        return Err(Error::Domain(format!("hurwitz_zeta needs a > 0, got {a}")));
    }
    let mut acc = CompensatedSum::new();
    for k in 0..EM_HEAD {
        acc.add((k as f64 + a).powf(-s));
    }
    let x = EM_HEAD as f64 + a;
    let x_s = x.powf(-s);
    acc.add(x * x_s / (s - 1.0));
    acc.add(0.5 * x_s);

    // t_j = s (s+1) ... (s+2j-2) x^{-s-2j+1}
    let coeffs = bernoulli_over_factorial();
    let inv_x2 = 1.0 / (x * x);
    let mut t = s * x_s / x;
    for (j, c) in coeffs.iter().enumerate().take(EM_CORRECTIONS + 1).skip(1) {
        acc.add(c * t);
        let jf = j as f64;
        t *= (s + 2.0 * jf - 1.0) * (s + 2.0 * jf) * inv_x2;
    }
    // f(x) = x^-s is completely monotone, so the remainder is bounded by the
    // first omitted correction.
    let bound = (coeffs[EM_CORRECTIONS + 1] * t).abs();
    Ok(EvalResult::new(
        acc.value(),
        EM_HEAD + EM_CORRECTIONS as u64,
        bound,
    ))
}

/// Riemann zeta for `s > 0`, `s != 1`, plus the single point `s = 0`.
pub fn riemann_zeta(s: f64) -> Result<EvalResult> {
    check_finite(s)?;
    if s == 0.0 {
        return Ok(EvalResult::exact(-0.5));
    }
    if s == 1.0 {
        return Err(Error::Pole(s));
    }
    if s < 0.0 {
        return Err(Error::Domain(format!("riemann_zeta needs s >= 0, got {s}")));
    }
    if s > 1.0 {
        return hurwitz_zeta(s, 1.0);
    }
    // 0 < s < 1: alternating eta series with Cohen–Villegas–Zagier
    // acceleration, then zeta = eta / (1 - 2^{1-s}).
    const N: u64 = 30;
    let n = N as f64;
    let base = 3.0 + 8f64.sqrt();
    let mut d = base.powf(n);
    d = 0.5 * (d + 1.0 / d);
    let mut b = -1.0;
    let mut c = -d;
    let mut acc = CompensatedSum::new();
    for k in 0..N {
        let kf = k as f64;
        c = b - c;
        acc.add(c * (kf + 1.0).powf(-s));
        b *= (kf + n) * (kf - n) / ((kf + 0.5) * (kf + 1.0));
    }
    let eta = acc.value() / d;
    let factor = 1.0 / (1.0 - 2f64.powf(1.0 - s));
    let bound = (2.0 / base.powf(n) * factor).abs();
    Ok(EvalResult::new(eta * factor, N, bound))
}

/// `zeta(2n)` as the nearest double; `zeta(0) = -1/2`.
///
/// Taken from the exact closed form and cached.
pub fn zeta_even(n: u32) -> f64 {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    if n > EXACT_EVEN_LIMIT {
        return 1.0;
    }
    let table = TABLE.get_or_init(|| {
        std::iter::once(-0.5)
            .chain(
                (1..=EXACT_EVEN_LIMIT)
                    .map(|m| exact::zeta_even_exact(m).expect("m >= 1").numeric()),
            )
            .collect()
    });
    table[n as usize]
}

/// `zeta(s) - 1` without cancellation, as `zeta(s, 2)`.
pub fn zeta_minus_one(s: f64) -> Result<EvalResult> {
    hurwitz_zeta(s, 2.0)
}

/// `zeta(2n) - 1` for `n >= 1`, cached for small `n`.
pub fn zeta_even_minus_one(n: u32) -> f64 {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    assert!(n >= 1, "zeta(0) - 1 is not used");
    let compute = |m: u32| zeta_minus_one(2.0 * m as f64).expect("s >= 2").value;
    if n > EXACT_EVEN_LIMIT {
        return compute(n);
    }
    let table = TABLE.get_or_init(|| {
        std::iter::once(f64::NAN)
            .chain((1..=EXACT_EVEN_LIMIT).map(compute))
            .collect()
    });
    table[n as usize]
}

/// Dirichlet beta for `s >= 1`, via `4^-s (zeta(s,1/4) - zeta(s,3/4))`.
pub fn dirichlet_beta(s: f64) -> Result<EvalResult> {
    check_finite(s)?;
    if s < 1.0 {
        return Err(Error::Domain(format!(
            "dirichlet_beta needs s >= 1, got {s}"
        )));
    }
    if s == 1.0 {
        return Ok(EvalResult::exact(PI / 4.0));
    }
    let lo = hurwitz_zeta(s, 0.25)?;
    let hi = hurwitz_zeta(s, 0.75)?;
    let scale = 4f64.powf(-s);
    Ok(EvalResult::new(
        scale * (lo.value - hi.value),
        lo.terms_used + hi.terms_used,
        scale * (lo.error_bound + hi.error_bound),
    ))
}

/// Catalan's constant `G = beta(2)`.
pub fn catalan() -> EvalResult {
    dirichlet_beta(2.0).expect("beta(2) is in domain")
}

/// Euler–Mascheroni constant from `H_N - ln N` with Euler–Maclaurin
/// corrections at `N = 100`.
pub fn euler_gamma() -> EvalResult {
    const N: u64 = 100;
    let n = N as f64;
    let mut acc: CompensatedSum = (1..=N).map(|k| 1.0 / k as f64).sum();
    acc.add(-n.ln());
    acc.add(-0.5 / n);
    let mut bound = 0.0;
    for k in 1..=EM_CORRECTIONS + 1 {
        let b = rational_to_f64(&exact::bernoulli(2 * k));
        let term = b / (2.0 * k as f64 * n.powi(2 * k as i32));
        if k == EM_CORRECTIONS + 1 {
            bound = term.abs();
        } else {
            acc.add(term);
        }
    }
    EvalResult::new(acc.value(), N + EM_CORRECTIONS as u64, bound)
}

/// `psi_n(z) = (-1)^{n+1} n! zeta(n+1, z)` for `n >= 1`, `z > 0`.
pub fn polygamma(order: u32, z: f64) -> Result<EvalResult> {
    if order == 0 {
        return Err(Error::Domain("polygamma needs order >= 1".into()));
    }
    let h = hurwitz_zeta(order as f64 + 1.0, z)?;
    let fact: f64 = (1..=order).map(f64::from).product();
    let sign = if order % 2 == 1 { 1.0 } else { -1.0 };
    Ok(EvalResult::new(
        sign * fact * h.value,
        h.terms_used,
        fact * h.error_bound,
    ))
}

/// `zeta_E(2k) (1 - 4^-k)`, with the removable singularity at `k = 0`
/// filled by its limit `pi / 4`.
pub fn zeta_e_weighted(k: u32) -> EvalResult {
    if k == 0 {
        return EvalResult::exact(PI / 4.0);
    }
    EvalResult::exact(exact::zeta_e_weighted_exact(k).numeric())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn zeta_two_is_basel() {
        let z = riemann_zeta(2.0).unwrap();
        assert!(rel(z.value, PI * PI / 6.0) <= 1e-13);
        assert!(z.error_bound <= 1e-15);
    }

    #[test]
    fn zeta_zero_and_errors() {
        let z = riemann_zeta(0.0).unwrap();
        assert_eq!(z.value, -0.5);
        assert_eq!(z.terms_used, 0);
        assert_eq!(riemann_zeta(1.0), Err(Error::Pole(1.0)));
        assert!(matches!(riemann_zeta(-2.0), Err(Error::Domain(_))));
        assert_eq!(riemann_zeta(f64::NAN), Err(Error::NonFinite));
    }

    #[test]
    fn zeta_three_matches_apery_series() {
        // Independent route: 5/2 sum (-1)^{n-1} / (n^3 C(2n, n)), 40 terms.
        let mut c = 1.0f64;
        let mut apery = CompensatedSum::new();
        for n in 1..=40u32 {
            let nf = n as f64;
            c *= 2.0 * (2.0 * nf - 1.0) / nf;
            let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
            apery.add(sign / (nf * nf * nf * c));
        }
        let oracle = 2.5 * apery.value();
        let z3 = riemann_zeta(3.0).unwrap().value;
        assert!(rel(z3, oracle) <= 1e-12);
        assert!(rel(z3, 1.2020569031595942) <= 1e-12);
    }

    #[test]
    fn zeta_below_one_uses_eta() {
        // zeta(1/2) = -1.4603545088095868...
        let z = riemann_zeta(0.5).unwrap();
        assert!((z.value + 1.460_354_508_809_586_8).abs() <= 1e-13);
        assert!(z.error_bound <= 1e-20);
    }

    #[test]
    fn hurwitz_relations() {
        for s in [2.0, 3.0, 4.0, 6.0, 8.0] {
            let z = riemann_zeta(s).unwrap().value;
            let one = hurwitz_zeta(s, 1.0).unwrap().value;
            let half = hurwitz_zeta(s, 0.5).unwrap().value / (2f64.powf(s) - 1.0);
            let two = 1.0 + hurwitz_zeta(s, 2.0).unwrap().value;
            for v in [one, half, two] {
                assert!(rel(v, z) <= 1e-11, "s = {s}");
            }
        }
        let h = hurwitz_zeta(2.0, 0.5).unwrap().value;
        assert!(rel(h, PI * PI / 2.0) <= 1e-13);
        let h = hurwitz_zeta(2.0, 2.0).unwrap().value;
        assert!(rel(h, PI * PI / 6.0 - 1.0) <= 1e-13);
    }

    #[test]
    fn hurwitz_domain() {
        assert!(hurwitz_zeta(1.0, 1.0).is_err());
        assert!(hurwitz_zeta(2.0, 0.0).is_err());
        assert!(hurwitz_zeta(2.0, f64::INFINITY).is_err());
    }

    #[test]
    fn hurwitz_accuracy_grid_against_long_direct_sum() {
        // Direct sum with an integral tail bracket as oracle, s in [2, 40],
        // a in [1/4, 2].
        for &s in &[2.0, 2.5, 3.0, 5.0, 10.0, 20.0, 40.0] {
            for &a in &[0.25, 0.5, 0.75, 1.0, 1.5, 2.0] {
                let m = if s < 3.0 { 200_000u64 } else { 20_000 };
                let head = crate::sum::compensated((0..m).map(|k| (k as f64 + a).powf(-s)));
                let x = m as f64 + a;
                // sum_{k>=m} f(k+a) lies between int_x^inf f and f(x) + int_x^inf f.
                let integral = x.powf(1.0 - s) / (s - 1.0);
                let mid = head + integral + 0.5 * x.powf(-s);
                let halfwidth = 0.5 * x.powf(-s) + 1e-16 * head;
                let h = hurwitz_zeta(s, a).unwrap();
                assert!((h.value - mid).abs() <= halfwidth, "s={s} a={a}");
                // Tight check where the oracle is sharp.
                if halfwidth <= 1e-13 * h.value {
                    assert!(rel(h.value, mid) <= 1e-12, "s={s} a={a}");
                }
            }
        }
    }

    #[test]
    fn even_zeta_matches_closed_form() {
        for n in 1..=10u32 {
            let direct = riemann_zeta(2.0 * n as f64).unwrap().value;
            let closed = exact::zeta_even_exact(n).unwrap().numeric();
            assert!(rel(direct, closed) <= 1e-12, "n = {n}");
            assert_eq!(zeta_even(n), closed);
        }
        assert_eq!(zeta_even(0), -0.5);
        assert_eq!(zeta_even(100), 1.0);
    }

    #[test]
    fn even_zeta_minus_one_has_relative_accuracy() {
        assert!(rel(zeta_even_minus_one(1), PI * PI / 6.0 - 1.0) <= 1e-14);
        for n in [5u32, 20, 40, 80] {
            let v = zeta_even_minus_one(n);
            let s = 2.0 * n as f64;
            // Leading terms 2^-s + 3^-s + 4^-s dominate.
            let approx: f64 = (2..60).map(|k| (k as f64).powf(-s)).sum();
            assert!(rel(v, approx) <= 1e-13, "n = {n}");
        }
    }

    #[test]
    fn dirichlet_beta_values() {
        let b3 = dirichlet_beta(3.0).unwrap().value;
        assert!(rel(b3, PI.powi(3) / 32.0) <= 1e-13);
        assert!(rel(catalan().value, 0.915_965_594_177_219) <= 1e-13);
        assert!(rel(dirichlet_beta(4.0).unwrap().value, 0.988_944_551_741_105_3) <= 1e-13);
        assert_eq!(dirichlet_beta(1.0).unwrap().value, PI / 4.0);
        assert!(dirichlet_beta(0.5).is_err());
    }

    #[test]
    fn beta_odd_matches_closed_form() {
        for n in 0..=4u32 {
            let direct = dirichlet_beta(2.0 * n as f64 + 1.0).unwrap().value;
            let closed = exact::beta_odd_exact(n).numeric();
            assert!(rel(direct, closed) <= 1e-11, "n = {n}");
        }
    }

    #[test]
    fn euler_gamma_value() {
        let g = euler_gamma();
        assert!((g.value - 0.577_215_664_901_532_9).abs() <= 1e-13);
        assert!(g.value > 0.57 && g.value < 0.58);
        assert!(g.error_bound < 1e-30);
    }

    #[test]
    fn polygamma_values() {
        let p = polygamma(3, 1.0).unwrap().value;
        assert!(rel(p, PI.powi(4) / 15.0) <= 1e-13);
        let p = polygamma(1, 1.0).unwrap().value;
        assert!(rel(p, PI * PI / 6.0) <= 1e-13);
        // psi_3(1/4) - psi_3(3/4) = 3! 4^4 beta(4).
        let d = polygamma(3, 0.25).unwrap().value - polygamma(3, 0.75).unwrap().value;
        let b4 = dirichlet_beta(4.0).unwrap().value;
        assert!(rel(d, 1536.0 * b4) <= 1e-12);
        assert!(polygamma(0, 1.0).is_err());
        assert!(polygamma(2, -1.0).is_err());
    }

    #[test]
    fn weighted_zeta_e() {
        assert_eq!(zeta_e_weighted(0).value, PI / 4.0);
        assert!(rel(zeta_e_weighted(1).value, PI.powi(3) / 32.0) <= 1e-14);
        let expect = PI.powi(5) / 288.0 * 15.0 / 16.0;
        assert!(rel(zeta_e_weighted(2).value, expect) <= 1e-14);
        // The weighted values coincide with beta(2k+1).
        for k in 0..6u32 {
            let b = exact::beta_odd_exact(k).numeric();
            assert!(rel(zeta_e_weighted(k).value, b) <= 1e-14, "k = {k}");
        }
    }

    #[test]
    fn weighted_zeta_e_at_zero_matches_partial_sum() {
        // sum 2 zeta(2n) (4^-n - 16^-n) = pi / 4.
        let s = crate::sum::compensated(
            (1..60)
                .map(|n| 2.0 * zeta_even(n) * (4f64.powi(-(n as i32)) - 16f64.powi(-(n as i32)))),
        );
        assert!((s - PI / 4.0).abs() <= 1e-14);
    }
}
