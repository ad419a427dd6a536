//! Exact integer and rational arithmetic: binomial coefficients, Bernoulli
//! and Euler numbers, and closed forms of the shape `rational * pi^k`.
//!
//! Bernoulli numbers follow the generating function `z / (e^z - 1)`, so
//! `B_1 = -1/2`. Euler numbers follow `sech t = 2 / (e^t + e^-t)`, so
//! `E_2 = -1`.
//!
//! Both tables are memoized in process-wide caches that only ever grow.
//! Readers share a read lock; extension takes the write lock.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sum::CompensatedSum;

/// Exact fraction, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

static BERNOULLI: RwLock<Vec<Rational>> = RwLock::new(Vec::new());
static EULER_EVEN: RwLock<Vec<BigInt>> = RwLock::new(Vec::new());

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // Exact at every step: acc = C(n, i) before the update.
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Exact Bernoulli number `B_n` (convention `B_1 = -1/2`).
pub fn bernoulli(n: usize) -> Rational {
    if n >= 3 && n % 2 == 1 {
        return Rational::zero();
    }
    if let Some(b) = BERNOULLI.read().expect("bernoulli cache poisoned").get(n) {
        return b.clone();
    }
    let mut table = BERNOULLI.write().expect("bernoulli cache poisoned");
    while table.len() <= n {
        let m = table.len();
        let next = if m == 0 {
            Rational::one()
        } else if m >= 3 && m % 2 == 1 {
            Rational::zero()
        } else {
            // sum_{k=0}^{m} C(m+1, k) B_k = 0, solved for B_m.
            let mut acc = Rational::zero();
            for (k, b) in table.iter().enumerate() {
                if !b.is_zero() {
                    acc += b * Rational::from_integer(binomial(m as u64 + 1, k as u64));
                }
            }
            -acc / Rational::from_integer(BigInt::from(m + 1))
        };
        table.push(next);
    }
    table[n].clone()
}

/// Exact Euler number `E_n`; zero for odd `n`.
pub fn euler_number(n: usize) -> BigInt {
    if n % 2 == 1 {
        return BigInt::zero();
    }
    let half = n / 2;
    if let Some(e) = EULER_EVEN.read().expect("euler cache poisoned").get(half) {
        return e.clone();
    }
    let mut table = EULER_EVEN.write().expect("euler cache poisoned");
    while table.len() <= half {
        let j = table.len();
        let next = if j == 0 {
            BigInt::one()
        } else {
            // sum_{k=0}^{j} C(2j, 2k) E_{2k} = 0, solved for E_{2j}.
            let m = 2 * j as u64;
            let acc = table
                .iter()
                .enumerate()
                .fold(BigInt::zero(), |acc, (k, e)| {
                    acc + binomial(m, 2 * k as u64) * e
                });
            -acc
        };
        table.push(next);
    }
    table[half].clone()
}

/// Exactly `coeff * pi^power`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiPower {
    pub coeff: Rational,
    pub power: u32,
}

impl PiPower {
    pub fn new(coeff: Rational, power: u32) -> Self {
        Self { coeff, power }
    }

    pub fn numeric(&self) -> f64 {
        rational_to_f64(&self.coeff) * PI.powi(self.power as i32)
    }

    pub fn scale(&self, by: &Rational) -> PiPower {
        PiPower::new(&self.coeff * by, self.power)
    }
}

impl fmt::Display for PiPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.power {
            0 => write!(f, "{}", self.coeff),
            1 => write!(f, "({})·π", self.coeff),
            p => write!(f, "({})·π^{}", self.coeff, p),
        }
    }
}

/// A finite sum `sum_k c_k pi^k` with rational `c_k`.
///
/// Closed forms built from this type convert to `f64` through one fixed
/// path, so two exactly equal forms always yield the same float.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PiPolynomial {
    terms: BTreeMap<u32, Rational>,
}

impl PiPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn rational(r: Rational) -> Self {
        Self::zero().plus(&PiPower::new(r, 0))
    }

    pub fn plus(mut self, term: &PiPower) -> Self {
        let slot = self.terms.entry(term.power).or_insert_with(Rational::zero);
        *slot += &term.coeff;
        if slot.is_zero() {
            self.terms.remove(&term.power);
        }
        self
    }

    pub fn plus_rational(self, r: Rational) -> Self {
        self.plus(&PiPower::new(r, 0))
    }

    pub fn scale(self, by: &Rational) -> Self {
        if by.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.into_iter().map(|(p, c)| (p, c * by)).collect(),
        }
    }

    pub fn numeric(&self) -> f64 {
        let mut acc = CompensatedSum::new();
        for (&power, coeff) in &self.terms {
            acc.add(rational_to_f64(coeff) * PI.powi(power as i32));
        }
        acc.value()
    }

    pub fn terms(&self) -> impl Iterator<Item = PiPower> + '_ {
        self.terms.iter().map(|(&p, c)| PiPower::new(c.clone(), p))
    }
}

impl From<PiPower> for PiPolynomial {
    fn from(p: PiPower) -> Self {
        PiPolynomial::zero().plus(&p)
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Falls back to a ratio of the leading digits for huge operands.
        let n = r.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

/// `zeta(2n) = (-1)^{n+1} B_{2n} 2^{2n-1} pi^{2n} / (2n)!`.
pub fn zeta_even_exact(n: u32) -> Result<PiPower> {
    if n == 0 {
        return Err(Error::Domain("zeta_even_exact needs n >= 1".into()));
    }
    let m = 2 * n as usize;
    let sign = if n % 2 == 1 { 1 } else { -1 };
    let coeff = bernoulli(m) * Rational::from_integer(BigInt::from(sign) << (m - 1))
        / Rational::from_integer(factorial(m as u64));
    Ok(PiPower::new(coeff, 2 * n))
}

/// `beta(2n+1) = (-1)^n E_{2n} pi^{2n+1} / (4^{n+1} (2n)!)`.
pub fn beta_odd_exact(n: u32) -> PiPower {
    let m = 2 * n as usize;
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let denom = (BigInt::one() << (2 * (n as usize + 1))) * factorial(m as u64);
    let coeff = Rational::new(euler_number(m) * sign, denom);
    PiPower::new(coeff, 2 * n + 1)
}

/// `zeta_E(2k) = (-1)^{k+1} E_{2k} pi^{2k+1} / (4 (1 - 4^k) (2k)!)`, `k >= 1`.
pub fn zeta_e_exact(k: u32) -> Result<PiPower> {
    if k == 0 {
        return Err(Error::Domain(
            "zeta_E(0) is singular (1 - 4^0 = 0); use the weighted form".into(),
        ));
    }
    let m = 2 * k as usize;
    let sign = if k % 2 == 1 { 1 } else { -1 };
    let one_minus = BigInt::one() - (BigInt::one() << (2 * k as usize));
    let denom = BigInt::from(4) * one_minus * factorial(m as u64);
    Ok(PiPower::new(
        Rational::new(euler_number(m) * sign, denom),
        2 * k + 1,
    ))
}

/// `zeta_E(2k) (1 - 4^-k)`; the removable singularity at `k = 0` takes its
/// limit `pi / 4`.
pub fn zeta_e_weighted_exact(k: u32) -> PiPower {
    if k == 0 {
        return PiPower::new(rat(1, 4), 1);
    }
    let four_k = BigInt::one() << (2 * k as usize);
    let weight = Rational::new(&four_k - BigInt::one(), four_k);
    zeta_e_exact(k).expect("k >= 1").scale(&weight)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TrigFn {
    Tan,
    Cot,
    Sec,
    Csc,
}

impl TrigFn {
    pub fn name(self) -> &'static str {
        match self {
            TrigFn::Tan => "tan",
            TrigFn::Cot => "cot",
            TrigFn::Sec => "sec",
            TrigFn::Csc => "csc",
        }
    }

    /// Radius of convergence of the expansion about zero.
    pub fn radius(self) -> f64 {
        match self {
            TrigFn::Tan | TrigFn::Sec => PI / 2.0,
            TrigFn::Cot | TrigFn::Csc => PI,
        }
    }

    pub fn eval(self, x: f64) -> f64 {
        match self {
            TrigFn::Tan => x.tan(),
            TrigFn::Cot => 1.0 / x.tan(),
            TrigFn::Sec => 1.0 / x.cos(),
            TrigFn::Csc => 1.0 / x.sin(),
        }
    }
}

impl std::str::FromStr for TrigFn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tan" => Ok(TrigFn::Tan),
            "cot" => Ok(TrigFn::Cot),
            "sec" => Ok(TrigFn::Sec),
            "csc" => Ok(TrigFn::Csc),
            other => Err(Error::Domain(format!("unknown trig function `{other}`"))),
        }
    }
}

/// Coefficient of `x^exponent` in a Laurent expansion about zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentCoeff {
    pub value: Rational,
    pub exponent: i64,
}

/// Exact coefficient of `x^k` in the expansion of `tan`, `cot`, `sec` or
/// `csc`. The `x^-1` term of `cot` and `csc` is kept as exponent `-1`.
pub fn taylor_coeff(f: TrigFn, k: i64) -> Result<LaurentCoeff> {
    if k < -1 {
        return Err(Error::Domain(format!("exponent {k} < -1")));
    }
    if k == -1 && matches!(f, TrigFn::Tan | TrigFn::Sec) {
        return Err(Error::Domain(format!("{} has no x^-1 term", f.name())));
    }
    let zero = || {
        Ok(LaurentCoeff {
            value: Rational::zero(),
            exponent: k,
        })
    };
    let value = match f {
        TrigFn::Sec => {
            if k % 2 != 0 {
                return zero();
            }
            let n = (k / 2) as usize;
            let sign = if n % 2 == 0 { 1 } else { -1 };
            Rational::new(euler_number(2 * n) * sign, factorial(2 * n as u64))
        }
        TrigFn::Tan | TrigFn::Cot | TrigFn::Csc => {
            if k.rem_euclid(2) != 1 {
                return zero();
            }
            // x^{2n-1}
            let n = ((k + 1) / 2) as usize;
            let b = bernoulli(2 * n) / Rational::from_integer(factorial(2 * n as u64));
            let four_n = Rational::from_integer(BigInt::one() << (2 * n));
            let sign = |even_positive: bool| if even_positive { 1 } else { -1 };
            match f {
                TrigFn::Tan => {
                    // (-1)^{n-1} 2^{2n} (2^{2n} - 1) B_{2n} / (2n)!
                    let s = sign(n % 2 == 1);
                    b * &four_n * (&four_n - Rational::one()) * rat(s, 1)
                }
                TrigFn::Cot => {
                    // (-1)^n 2^{2n} B_{2n} / (2n)!
                    let s = sign(n % 2 == 0);
                    b * four_n * rat(s, 1)
                }
                _ => {
                    // (-1)^{n+1} 2 (2^{2n-1} - 1) B_{2n} / (2n)!
                    let s = sign(n % 2 == 1);
                    let half = four_n / rat(2, 1);
                    b * rat(2 * s, 1) * (half - Rational::one())
                }
            }
        }
    };
    Ok(LaurentCoeff { value, exponent: k })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    /// Akiyama–Tanigawa: an independent route to B_n (it yields B_1 = +1/2,
    /// flipped here).
    fn bernoulli_oracle(n: usize) -> Rational {
        let mut row: Vec<Rational> = (0..=n).map(|m| rat(1, m as i64 + 1)).collect();
        for _ in 0..n {
            row = (0..row.len() - 1)
                .map(|j| rat(j as i64 + 1, 1) * (&row[j] - &row[j + 1]))
                .collect();
        }
        if n == 1 {
            -row[0].clone()
        } else {
            row[0].clone()
        }
    }

    /// Seidel's boustrophedon for the zigzag numbers; |E_{2n}| is the
    /// 2n-th secant number.
    fn euler_oracle(n: usize) -> BigInt {
        if n % 2 == 1 {
            return BigInt::zero();
        }
        let mut row = vec![BigInt::one()];
        let mut zigzag = vec![BigInt::one()];
        for k in 1..=n {
            let mut next = vec![BigInt::zero(); k + 1];
            if k % 2 == 1 {
                for j in 1..=k {
                    next[j] = &next[j - 1] + &row[j - 1];
                }
                zigzag.push(next[k].clone());
            } else {
                for j in (0..k).rev() {
                    next[j] = &next[j + 1] + &row[j];
                }
                zigzag.push(next[0].clone());
            }
            row = next;
        }
        let mag = zigzag[n].clone();
        if (n / 2) % 2 == 0 {
            mag
        } else {
            -mag
        }
    }

    #[test]
    fn binomial_small_cases() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        for n in 0..20 {
            assert_eq!(binomial(n, 0), BigInt::one());
        }
        assert_eq!(binomial(7, 9), BigInt::zero());
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
    }

    #[test]
    fn bernoulli_frozen_values() {
        assert_eq!(bernoulli(0), rat(1, 1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(7), Rational::zero());
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn bernoulli_matches_akiyama_tanigawa() {
        for n in 0..=30 {
            assert_eq!(bernoulli(n), bernoulli_oracle(n), "B_{n}");
        }
    }

    #[test]
    fn euler_frozen_values() {
        assert_eq!(euler_number(0), BigInt::one());
        assert_eq!(euler_number(2), BigInt::from(-1));
        assert_eq!(euler_number(4), BigInt::from(5));
        assert_eq!(euler_number(5), BigInt::zero());
        assert_eq!(euler_number(10), BigInt::from(-50521));
    }

    #[test]
    fn euler_matches_seidel_triangle() {
        for n in 0..=30 {
            assert_eq!(euler_number(n), euler_oracle(n), "E_{n}");
        }
    }

    #[test]
    fn recurrences_hold_to_forty() {
        for n in 1..=40usize {
            let s = (0..=n).fold(Rational::zero(), |acc, k| {
                acc + bernoulli(k) * Rational::from_integer(binomial(n as u64 + 1, k as u64))
            });
            assert!(s.is_zero(), "bernoulli recurrence at {n}");
        }
        for n in (2..=40usize).step_by(2) {
            let s = (0..=n / 2).fold(BigInt::zero(), |acc, k| {
                acc + binomial(n as u64, 2 * k as u64) * euler_number(2 * k)
            });
            assert!(s.is_zero(), "euler recurrence at {n}");
        }
    }

    #[test]
    fn rationals_are_normalized() {
        for n in 0..=40 {
            let b = bernoulli(n);
            assert!(b.denom().is_positive());
            assert!(num_integer::Integer::gcd(b.numer(), b.denom()).is_one());
        }
        let z = zeta_even_exact(5).unwrap();
        assert!(z.coeff.denom().is_positive());
    }

    #[test]
    fn zeta_even_closed_forms() {
        assert_eq!(zeta_even_exact(1).unwrap(), PiPower::new(rat(1, 6), 2));
        assert_eq!(zeta_even_exact(2).unwrap(), PiPower::new(rat(1, 90), 4));
        assert_eq!(zeta_even_exact(3).unwrap(), PiPower::new(rat(1, 945), 6));
        assert!(zeta_even_exact(0).is_err());
    }

    #[test]
    fn zeta_even_against_direct_sum() {
        // Direct sum to 10^6 plus the integral tail bracket
        // [1/((s-1)(N+1)^{s-1}), 1/((s-1)N^{s-1})].
        let n_terms = 1_000_000u64;
        for n in 1..=5u32 {
            let s = 2.0 * n as f64;
            let head = crate::sum::compensated((1..=n_terms).map(|m| (m as f64).powf(-s)));
            let lo = head + 1.0 / ((s - 1.0) * ((n_terms + 1) as f64).powf(s - 1.0));
            let hi = head + 1.0 / ((s - 1.0) * (n_terms as f64).powf(s - 1.0));
            let exact = zeta_even_exact(n).unwrap().numeric();
            let slack = 1e-15 * exact;
            assert!(exact >= lo - slack && exact <= hi + slack, "zeta({s})");
        }
    }

    #[test]
    fn beta_odd_closed_forms() {
        assert_eq!(beta_odd_exact(0), PiPower::new(rat(1, 4), 1));
        assert_eq!(beta_odd_exact(1), PiPower::new(rat(1, 32), 3));
        assert_eq!(beta_odd_exact(2), PiPower::new(rat(5, 1536), 5));
    }

    #[test]
    fn zeta_e_closed_forms() {
        assert_eq!(zeta_e_exact(1).unwrap(), PiPower::new(rat(1, 24), 3));
        assert_eq!(zeta_e_exact(2).unwrap(), PiPower::new(rat(1, 288), 5));
        assert!(zeta_e_exact(0).is_err());
    }

    #[test]
    fn weighted_zeta_e_is_beta_odd() {
        for k in 0..12 {
            assert_eq!(zeta_e_weighted_exact(k), beta_odd_exact(k), "k = {k}");
        }
    }

    #[test]
    fn pi_power_numeric() {
        let z2 = zeta_even_exact(1).unwrap().numeric();
        let direct = PI * PI / 6.0;
        assert!((z2 - direct).abs() <= 1e-13 * direct);
        let b3 = beta_odd_exact(1).numeric();
        assert!((b3 - PI.powi(3) / 32.0).abs() <= 1e-13 * b3);
    }

    #[test]
    fn taylor_frozen_values() {
        assert_eq!(taylor_coeff(TrigFn::Tan, 1).unwrap().value, rat(1, 1));
        assert_eq!(taylor_coeff(TrigFn::Tan, 3).unwrap().value, rat(1, 3));
        assert_eq!(taylor_coeff(TrigFn::Cot, -1).unwrap().value, rat(1, 1));
        assert_eq!(taylor_coeff(TrigFn::Cot, 1).unwrap().value, rat(-1, 3));
        assert_eq!(taylor_coeff(TrigFn::Sec, 0).unwrap().value, rat(1, 1));
        assert_eq!(taylor_coeff(TrigFn::Sec, 2).unwrap().value, rat(1, 2));
        assert_eq!(taylor_coeff(TrigFn::Csc, -1).unwrap().value, rat(1, 1));
        assert_eq!(taylor_coeff(TrigFn::Csc, 1).unwrap().value, rat(1, 6));
        assert_eq!(
            taylor_coeff(TrigFn::Tan, 2).unwrap().value,
            Rational::zero()
        );
        assert!(taylor_coeff(TrigFn::Tan, -1).is_err());
        assert!(taylor_coeff(TrigFn::Sec, -1).is_err());
        assert!(taylor_coeff(TrigFn::Cot, -2).is_err());
    }

    fn partial_taylor(f: TrigFn, terms: usize, x: f64) -> f64 {
        (-1..200)
            .filter_map(|k| taylor_coeff(f, k).ok())
            .filter(|c| !c.value.is_zero())
            .take(terms)
            .map(|c| rational_to_f64(&c.value) * x.powi(c.exponent as i32))
            .sum()
    }

    #[test]
    fn taylor_partial_sums_match_native_trig() {
        for f in [TrigFn::Tan, TrigFn::Cot, TrigFn::Sec, TrigFn::Csc] {
            for x in [0.1f64, 0.5, 1.0] {
                // tan/sec at x = 1 sit at ratio (2/pi)^2 ~ 0.405 per term, so
                // twenty terms leave ~2e-8; thirty reach the 1e-10 target.
                let terms = if x == 1.0 && f.radius() < 2.0 { 30 } else { 20 };
                let err = (partial_taylor(f, terms, x) - f.eval(x)).abs();
                assert!(err <= 1e-10, "{} at {x}: err {err:e}", f.name());
            }
        }
    }

    #[test]
    fn twenty_term_tan_sec_at_one_within_geometric_remainder() {
        for f in [TrigFn::Tan, TrigFn::Sec] {
            let err = (partial_taylor(f, 20, 1.0) - f.eval(1.0)).abs();
            let ratio = (1.0 / f.radius()).powi(2);
            // |coefficient of the n-th nonzero term| <= 2 zeta(2) (2/pi)^{2n}
            // for both series.
            let bound = PI * PI / 3.0 * ratio.powi(20) / (1.0 - ratio);
            assert!(
                err > 1e-10 && err <= bound,
                "{}: err {err:e} bound {bound:e}",
                f.name()
            );
        }
    }

    #[test]
    fn caches_are_safe_under_concurrent_readers() {
        let handles: Vec<_> = (0..8)
            .map(|t| std::thread::spawn(move || (bernoulli(20 + 2 * t), euler_number(20 + 2 * t))))
            .collect();
        for (t, h) in handles.into_iter().enumerate() {
            let (b, e) = h.join().unwrap();
            assert_eq!(b, bernoulli_oracle(20 + 2 * t));
            assert_eq!(e, euler_oracle(20 + 2 * t));
        }
    }
}
