//! Summand generators and their geometric majorants.

use crate::specfun::{zeta_even, zeta_even_minus_one, zeta_minus_one};

/// Headroom on majorants for the rounding in `zeta(2)` and friends.
const MAJORANT_SLACK: f64 = 1.0 + 8.0 * f64::EPSILON;

/// Guard against runaway prefix sums in [`Series::tail_bound`].
const MAX_PREFIX: u64 = 100_000;

/// Zeta-valued coefficient of the n-th summand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coef {
    /// `zeta(2n)`; `zeta(0) = -1/2`.
    Zeta2n,
    /// `zeta(2n) - 1`.
    Zeta2nMinusOne,
    /// `zeta(n) - 1`, `n >= 2`.
    ZetaNMinusOne,
    /// `zeta(2n) (1 - 4^-n)`.
    Zeta2nWeighted,
}

impl Coef {
    fn value(self, n: u64) -> f64 {
        match self {
            Coef::Zeta2n => zeta_even(n as u32),
            Coef::Zeta2nMinusOne => zeta_even_minus_one(n as u32),
            Coef::ZetaNMinusOne => zeta_minus_one(n as f64).expect("n >= 2").value,
            Coef::Zeta2nWeighted => zeta_even(n as u32) * (1.0 - 4f64.powi(-(n as i32))),
        }
    }

    /// Upper bound on `|value(n)|` for `n >= 1` (`n >= 2` for `ZetaNMinusOne`).
    fn majorant(self, n: u64) -> f64 {
        let nf = n as f64;
        match self {
            Coef::Zeta2n | Coef::Zeta2nWeighted => zeta_even(1),
            // sum_{k>=2} k^-s <= 2^-s + int_2^inf x^-s dx
            Coef::Zeta2nMinusOne => 4f64.powf(-nf) * (2.0 * nf + 1.0) / (2.0 * nf - 1.0),
            Coef::ZetaNMinusOne => 2f64.powf(-nf) * (nf + 1.0) / (nf - 1.0),
        }
    }

    /// Bound on `majorant(k+1) / majorant(k)` for every `k >= n`.
    fn ratio(self) -> f64 {
        match self {
            Coef::Zeta2n | Coef::Zeta2nWeighted => 1.0,
            Coef::Zeta2nMinusOne => 0.25,
            Coef::ZetaNMinusOne => 0.5,
        }
    }
}

/// `a n + b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Affine(pub f64, pub f64);

impl Affine {
    fn at(self, n: f64) -> f64 {
        self.0 * n + self.1
    }
}

/// `C(top * n + offset, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Binom {
    pub top: u64,
    pub offset: u64,
    pub m: u64,
}

impl Binom {
    fn at(self, n: u64) -> f64 {
        let upper = self.top * n + self.offset;
        if self.m > upper {
            return 0.0;
        }
        let k = self.m.min(upper - self.m);
        (0..k).fold(1.0, |acc, i| acc * (upper - i) as f64 / (i + 1) as f64)
    }

    /// Ratio bound valid for all `k >= n`, or `None` below the support.
    fn ratio(self, n: u64) -> Option<f64> {
        let upper = (self.top * n + self.offset) as f64;
        if upper < self.m as f64 {
            return None;
        }
        let step = self.top as f64;
        Some((0..self.m).fold(1.0, |acc, i| {
            let i = i as f64;
            acc * (upper + step - i) / (upper - i)
        }))
    }
}

/// `scale * coef(n) * prod(numer) / prod(denom) * binom * base^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct Shape {
    pub coef: Coef,
    pub scale: f64,
    pub base: f64,
    pub numer: Vec<Affine>,
    pub denom: Vec<Affine>,
    pub binom: Option<Binom>,
}

impl Shape {
    pub fn new(coef: Coef, base: f64) -> Self {
        Self {
            coef,
            scale: 1.0,
            base,
            numer: Vec::new(),
            denom: Vec::new(),
            binom: None,
        }
    }

    pub fn scale(mut self, scale: f64) -> Self {
        self.scale = scale;
        self
    }

    pub fn numer(mut self, a: f64, b: f64) -> Self {
        self.numer.push(Affine(a, b));
        self
    }

    pub fn denom(mut self, a: f64, b: f64) -> Self {
        self.denom.push(Affine(a, b));
        self
    }

    pub fn binom(mut self, top: u64, offset: u64, m: u64) -> Self {
        self.binom = Some(Binom { top, offset, m });
        self
    }

    fn rational_part(&self, n: u64) -> f64 {
        let nf = n as f64;
        let num: f64 = self.numer.iter().map(|f| f.at(nf)).product();
        let den: f64 = self.denom.iter().map(|f| f.at(nf)).product();
        let binom = self.binom.map_or(1.0, |b| b.at(n));
        num / den * binom
    }

    fn term(&self, n: u64) -> f64 {
        let rational = self.rational_part(n);
        if rational == 0.0 {
            return 0.0;
        }
        self.scale * self.coef.value(n) * rational * self.base.powi(n as i32)
    }

    fn majorant(&self, n: u64) -> f64 {
        let rational = self.rational_part(n).abs();
        if rational == 0.0 {
            return 0.0;
        }
        MAJORANT_SLACK
            * self.scale.abs()
            * self.coef.majorant(n)
            * rational
            * self.base.powi(n as i32)
    }

    fn ratio(&self, n: u64) -> Option<f64> {
        let nf = n as f64;
        let mut rho = self.base * self.coef.ratio();
        for f in &self.numer {
            if f.0 <= 0.0 || f.at(nf) <= 0.0 {
                return None;
            }
            rho *= f.at(nf + 1.0) / f.at(nf);
        }
        // Denominator factors only shrink the ratio once positive.
        if self.denom.iter().any(|f| f.0 < 0.0 || f.at(nf) <= 0.0) {
            return None;
        }
        if let Some(b) = self.binom {
            rho *= b.ratio(n)?;
        }
        Some(rho)
    }
}

/// A summand generator together with a majorant whose successive ratios
/// are bounded, which is what [`Series::tail_bound`] relies on.
#[derive(Debug, Clone, PartialEq)]
pub enum Series {
    Shape(Shape),
    /// `(-1)^{n-1} / (n^3 C(2n, n))`.
    CentralBinomial,
}

fn central_binomial(n: u64) -> f64 {
    (1..=n).fold(1.0, |acc, i| acc * (n + i) as f64 / i as f64)
}

impl Series {
    pub fn term(&self, n: u64) -> f64 {
        match self {
            Series::Shape(s) => s.term(n),
            Series::CentralBinomial => {
                let nf = n as f64;
                let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
                sign / (nf * nf * nf * central_binomial(n))
            }
        }
    }

    /// Upper bound on `|term(n)|` for `n >= 1`.
    pub fn majorant(&self, n: u64) -> f64 {
        match self {
            Series::Shape(s) => s.majorant(n),
            Series::CentralBinomial => self.term(n).abs() * MAJORANT_SLACK,
        }
    }

    /// Bound on `majorant(k+1) / majorant(k)` valid for every `k >= n`;
    /// nonincreasing in `n` where defined.
    pub fn ratio(&self, n: u64) -> Option<f64> {
        match self {
            Series::Shape(s) => s.ratio(n),
            Series::CentralBinomial => {
                let nf = n as f64;
                Some((nf + 1.0) / (2.0 * (2.0 * nf + 1.0)))
            }
        }
    }

    /// Bound on `|sum_{n > last} term(n)|`: explicit majorants until the
    /// ratio bound drops below one, then a geometric remainder.
    pub fn tail_bound(&self, last: u64) -> f64 {
        let mut acc = 0.0;
        for n in (last + 1..).take(MAX_PREFIX as usize) {
            if let Some(rho) = self.ratio(n) {
                if rho < 1.0 {
                    return acc + self.majorant(n) / (1.0 - rho);
                }
            }
            acc += self.majorant(n);
        }
        f64::INFINITY
    }
}
