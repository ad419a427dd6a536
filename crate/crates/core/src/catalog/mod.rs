//! Registry of the series identities: summand generators, closed forms,
//! rigorous tail bounds and print status.
//!
//! Entries are either scalar identities or integer-parameterized families.
//! A [`CatalogKey`] names one concrete instance (`id` plus the family
//! parameter, if any).

mod registry;
pub mod series;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::PiPolynomial;
use crate::specfun::EvalResult;
use crate::sum::CompensatedSum;
pub use series::Series;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// The displayed right-hand side is correct.
    AsPrinted,
    /// The displayed right-hand side is wrong; both variants are kept.
    Corrected,
    /// A representation of `Cl2` used by the special functions.
    Representation,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::AsPrinted => "as-printed",
            Status::Corrected => "corrected",
            Status::Representation => "representation",
        }
    }
}

/// Integer parameter domain of a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParamDomain {
    None,
    M { min: u32 },
    K { min: u32 },
}

impl ParamDomain {
    pub fn name(self) -> Option<&'static str> {
        match self {
            ParamDomain::None => None,
            ParamDomain::M { .. } => Some("m"),
            ParamDomain::K { .. } => Some("k"),
        }
    }

    pub fn min(self) -> Option<u32> {
        match self {
            ParamDomain::None => None,
            ParamDomain::M { min } | ParamDomain::K { min } => Some(min),
        }
    }

    pub fn contains(self, param: Option<u32>) -> bool {
        match (self.min(), param) {
            (None, None) => true,
            (Some(min), Some(p)) => p >= min,
            _ => false,
        }
    }

    pub fn describe(self) -> String {
        match (self.name(), self.min()) {
            (Some(name), Some(min)) => format!("{name} >= {min}"),
            _ => "none".to_string(),
        }
    }

    /// Parameters from the domain minimum up to `limit` inclusive.
    pub fn values(self, limit: u32) -> Vec<Option<u32>> {
        match self.min() {
            None => vec![None],
            Some(min) => (min..=limit).map(Some).collect(),
        }
    }
}

/// Constants whose value an identity reconstructs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    Zeta3,
    Catalan,
}

/// One concrete identity: registry id plus family parameter.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CatalogKey {
    pub id: String,
    pub params: Option<u32>,
}

impl CatalogKey {
    pub fn new(id: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            params: None,
        }
    }

    pub fn with_param(id: impl Into<String>, param: u32) -> Self {
        Self {
            id: id.into(),
            params: Some(param),
        }
    }
}

impl fmt::Display for CatalogKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (
            self.params,
            lookup(&self.id).ok().and_then(|d| d.domain.name()),
        ) {
            (Some(p), Some(name)) => write!(f, "{}[{name}={p}]", self.id),
            (Some(p), None) => write!(f, "{}[{p}]", self.id),
            (None, _) => f.write_str(&self.id),
        }
    }
}

/// Right-hand side of an identity.
#[derive(Debug, Clone, PartialEq)]
pub enum ClosedForm {
    /// Finite rational combination of powers of pi.
    Exact(PiPolynomial),
    /// Involves logarithms, `G`, `gamma`, `zeta(3)` or `beta(4)`.
    Numeric(f64),
}

impl ClosedForm {
    pub fn value(&self) -> f64 {
        match self {
            ClosedForm::Exact(p) => p.numeric(),
            ClosedForm::Numeric(v) => *v,
        }
    }
}

/// `target = offset + scale * series`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Assembly {
    pub offset: f64,
    pub scale: f64,
}

impl Assembly {
    pub fn apply(&self, series: f64) -> f64 {
        self.offset + self.scale * series
    }

    /// Series value implied by a known target value.
    pub fn invert(&self, target: f64) -> f64 {
        (target - self.offset) / self.scale
    }
}

type Param = Option<u32>;

/// One registry entry.
pub struct IdentityDescriptor {
    pub id: &'static str,
    pub paper_eq: &'static str,
    pub description: &'static str,
    pub status: Status,
    pub domain: ParamDomain,
    pub start_index: u64,
    pub targets: &'static [Target],
    series: fn(Param) -> Series,
    closed: fn(Param) -> ClosedForm,
    printed: Option<fn(Param) -> ClosedForm>,
    assembly: Option<fn() -> Assembly>,
}

impl fmt::Debug for IdentityDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityDescriptor")
            .field("id", &self.id)
            .field("paper_eq", &self.paper_eq)
            .field("status", &self.status)
            .field("domain", &self.domain)
            .field("start_index", &self.start_index)
            .finish_non_exhaustive()
    }
}

impl IdentityDescriptor {
    pub fn is_family(&self) -> bool {
        self.domain != ParamDomain::None
    }

    pub fn has_printed_variant(&self) -> bool {
        self.printed.is_some()
    }

    pub fn keys(&self, limit: u32) -> Vec<CatalogKey> {
        self.domain
            .values(limit)
            .into_iter()
            .map(|params| CatalogKey {
                id: self.id.to_string(),
                params,
            })
            .collect()
    }

    pub fn summary(&self) -> IdentitySummary {
        IdentitySummary {
            id: self.id,
            paper_eq: self.paper_eq,
            status: self.status,
            params: self.domain.describe(),
            start_index: self.start_index,
            description: self.description,
        }
    }
}

/// Serializable view of a registry entry.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentitySummary {
    pub id: &'static str,
    pub paper_eq: &'static str,
    pub status: Status,
    pub params: String,
    pub start_index: u64,
    pub description: &'static str,
}

pub fn registry() -> &'static [IdentityDescriptor] {
    registry::ENTRIES
}

/// All entries, ordered by equation number as they appear in the source.
pub fn list_identities() -> Vec<IdentitySummary> {
    registry().iter().map(IdentityDescriptor::summary).collect()
}

pub fn lookup(id: &str) -> Result<&'static IdentityDescriptor> {
    registry()
        .iter()
        .find(|d| d.id == id)
        .ok_or_else(|| Error::UnknownKey(id.to_string()))
}

/// A resolved key: descriptor, validated parameter and summand generator.
#[derive(Debug, Clone)]
pub struct Instance {
    pub descriptor: &'static IdentityDescriptor,
    pub key: CatalogKey,
    series: Series,
}

impl Instance {
    pub fn new(key: &CatalogKey) -> Result<Self> {
        let descriptor = lookup(&key.id)?;
        if !descriptor.domain.contains(key.params) {
            return Err(Error::Parameter {
                id: key.id.clone(),
                param: key.params,
            });
        }
        Ok(Self {
            descriptor,
            key: key.clone(),
            series: (descriptor.series)(key.params),
        })
    }

    pub fn start_index(&self) -> u64 {
        self.descriptor.start_index
    }

    pub fn series(&self) -> &Series {
        &self.series
    }

    fn check_index(&self, n: u64) -> Result<()> {
        if n < self.start_index() {
            return Err(Error::Index {
                id: self.key.id.clone(),
                n,
                start: self.start_index(),
            });
        }
        Ok(())
    }

    pub fn term(&self, n: u64) -> Result<f64> {
        self.check_index(n)?;
        Ok(self.series.term(n))
    }

    /// Compensated sum of the terms `start_index..=last`.
    pub fn partial_sum(&self, last: u64) -> Result<EvalResult> {
        self.check_index(last)?;
        let acc: CompensatedSum = (self.start_index()..=last)
            .map(|n| self.series.term(n))
            .sum();
        Ok(EvalResult::new(
            acc.value(),
            last - self.start_index() + 1,
            self.series.tail_bound(last),
        ))
    }

    pub fn tail_bound(&self, last: u64) -> Result<f64> {
        self.check_index(last)?;
        Ok(self.series.tail_bound(last))
    }

    /// Least `N >= start_index` whose tail bound is at most `target`.
    pub fn terms_for_tail(&self, target: f64, cap: u64) -> Result<u64> {
        let mut n = self.start_index();
        loop {
            if self.series.tail_bound(n) <= target {
                return Ok(n);
            }
            if n >= cap {
                return Err(Error::Inconclusive {
                    id: self.key.to_string(),
                    cap,
                    target,
                });
            }
            n += 1;
        }
    }

    /// Right-hand side; the corrected one for `Status::Corrected` entries.
    pub fn closed_form(&self) -> ClosedForm {
        (self.descriptor.closed)(self.key.params)
    }

    /// Right-hand side exactly as displayed, when it differs.
    pub fn printed_form(&self) -> Option<ClosedForm> {
        self.descriptor.printed.map(|f| f(self.key.params))
    }

    pub fn assembly(&self) -> Option<Assembly> {
        self.descriptor.assembly.map(|f| f())
    }

    /// Factor by which a series error grows once assembled (1 without an
    /// assembly).
    pub fn error_gain(&self) -> f64 {
        self.assembly().map_or(1.0, |a| a.scale.abs())
    }

    /// Partial sum pushed through the assembly, bound scaled to match.
    pub fn assembled_sum(&self, last: u64) -> Result<EvalResult> {
        let s = self.partial_sum(last)?;
        Ok(match self.assembly() {
            Some(a) => EvalResult::new(
                a.apply(s.value),
                s.terms_used,
                s.error_bound * a.scale.abs(),
            ),
            None => s,
        })
    }

    /// Value the assembled sum converges to: `zeta(3)` from the independent
    /// Euler-Maclaurin evaluation for assembled entries, the closed form
    /// otherwise.
    pub fn assembled_target(&self) -> f64 {
        match self.assembly() {
            Some(_) => crate::specfun::riemann_zeta(3.0).expect("s = 3").value,
            None => self.closed_form().value(),
        }
    }
}

pub fn term(key: &CatalogKey, n: u64) -> Result<f64> {
    Instance::new(key)?.term(n)
}

pub fn closed_form(key: &CatalogKey) -> Result<f64> {
    Ok(Instance::new(key)?.closed_form().value())
}

pub fn printed_closed_form(key: &CatalogKey) -> Result<Option<f64>> {
    Ok(Instance::new(key)?.printed_form().map(|c| c.value()))
}

pub fn partial_sum(key: &CatalogKey, last: u64) -> Result<EvalResult> {
    Instance::new(key)?.partial_sum(last)
}

pub fn tail_bound(key: &CatalogKey, last: u64) -> Result<f64> {
    Instance::new(key)?.tail_bound(last)
}

#[cfg(test)]
mod tests;
