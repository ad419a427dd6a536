//! Terms and wall time each identity needs to reach a tolerance.

use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{self, CatalogKey, Instance, Target};
use crate::error::{Error, Result};
use crate::sum::CompensatedSum;

pub const MAX_TERMS: u64 = 1_000_000;
/// Family parameters profiled by `compare(All, ..)`.
pub const DEFAULT_PARAM_LIMIT: u32 = 12;

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceProfile {
    pub key: CatalogKey,
    pub paper_eq: &'static str,
    pub tolerance: f64,
    /// Number of summed terms, counted from the entry's start index.
    pub terms_needed: u64,
    /// Error of the (assembled) partial sum at `terms_needed`.
    pub achieved_error: f64,
    pub wall_time: Duration,
}

/// Least number of terms whose assembled partial sum is within `tolerance`
/// of the target, by linear scan.
pub fn profile(key: &CatalogKey, tolerance: f64) -> Result<ConvergenceProfile> {
    profile_with_cap(key, tolerance, MAX_TERMS)
}

pub fn profile_with_cap(key: &CatalogKey, tolerance: f64, cap: u64) -> Result<ConvergenceProfile> {
    let inst = Instance::new(key)?;
    let (count, achieved_error) = scan(&inst, tolerance, cap)?;
    Ok(ConvergenceProfile {
        key: key.clone(),
        paper_eq: inst.descriptor.paper_eq,
        tolerance,
        terms_needed: count,
        achieved_error,
        wall_time: time_evaluation(&inst, count),
    })
}

fn scan(inst: &Instance, tolerance: f64, cap: u64) -> Result<(u64, f64)> {
    if !(tolerance.is_finite() && tolerance >= crate::verifier::MIN_TOLERANCE) {
        return Err(Error::Domain(format!("bad tolerance {tolerance:e}")));
    }
    let assembly = inst.assembly();
    let target = inst.assembled_target();
    let start = inst.start_index();
    let mut acc = CompensatedSum::new();
    for count in 1..=cap {
        acc.add(inst.series().term(start + count - 1));
        let value = assembly.map_or(acc.value(), |a| a.apply(acc.value()));
        let err = (value - target).abs();
        if err <= tolerance {
            return Ok((count, err));
        }
    }
    Err(Error::Inconclusive {
        id: inst.key.to_string(),
        cap,
        target: tolerance,
    })
}

/// Second of two evaluations at the found `N`; the first warms caches.
fn time_evaluation(inst: &Instance, count: u64) -> Duration {
    let last = inst.start_index() + count - 1;
    std::hint::black_box(inst.assembled_sum(last).expect("last >= start"));
    let t0 = Instant::now();
    std::hint::black_box(inst.assembled_sum(last).expect("last >= start"));
    t0.elapsed()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CompareTarget {
    Zeta3,
    CatalanRelations,
    All,
}

impl CompareTarget {
    pub fn name(self) -> &'static str {
        match self {
            CompareTarget::Zeta3 => "zeta3",
            CompareTarget::CatalanRelations => "catalan-relations",
            CompareTarget::All => "all",
        }
    }

    fn keys(self, param_limit: u32) -> Vec<CatalogKey> {
        let wanted = match self {
            CompareTarget::Zeta3 => Some(Target::Zeta3),
            CompareTarget::CatalanRelations => Some(Target::Catalan),
            CompareTarget::All => None,
        };
        catalog::registry()
            .iter()
            .filter(|d| wanted.map_or(true, |t| d.targets.contains(&t)))
            .flat_map(|d| d.keys(param_limit))
            .collect()
    }
}

impl fmt::Display for CompareTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CompareTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            CompareTarget::Zeta3,
            CompareTarget::CatalanRelations,
            CompareTarget::All,
        ]
        .into_iter()
        .find(|t| t.name() == s)
        .ok_or_else(|| Error::UnknownTarget(s.to_string()))
    }
}

pub fn compare(target: CompareTarget, tolerance: f64) -> Result<Vec<ConvergenceProfile>> {
    compare_with_params(target, tolerance, DEFAULT_PARAM_LIMIT)
}

/// Profiles every entry built on `target`, sorted by terms, then wall time,
/// then key. Searches run concurrently; timings run one at a time.
pub fn compare_with_params(
    target: CompareTarget,
    tolerance: f64,
    param_limit: u32,
) -> Result<Vec<ConvergenceProfile>> {
    let instances: Vec<Instance> = target
        .keys(param_limit)
        .iter()
        .map(Instance::new)
        .collect::<Result<_>>()?;
    let found: Vec<(u64, f64)> = instances
        .par_iter()
        .map(|inst| scan(inst, tolerance, MAX_TERMS))
        .collect::<Result<_>>()?;
    let mut rows: Vec<ConvergenceProfile> = instances
        .iter()
        .zip(found)
        .map(|(inst, (count, err))| ConvergenceProfile {
            key: inst.key.clone(),
            paper_eq: inst.descriptor.paper_eq,
            tolerance,
            terms_needed: count,
            achieved_error: err,
            wall_time: time_evaluation(inst, count),
        })
        .collect();
    rows.sort_by(|a, b| {
        a.terms_needed
            .cmp(&b.terms_needed)
            .then(a.wall_time.cmp(&b.wall_time))
            .then_with(|| a.key.cmp(&b.key))
    });
    Ok(rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExportFormat {
    Csv,
    Json,
    Markdown,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(ExportFormat::Csv),
            "json" => Ok(ExportFormat::Json),
            "markdown" | "md" => Ok(ExportFormat::Markdown),
            other => Err(Error::Format(other.to_string())),
        }
    }
}

pub const CSV_HEADER: &str = "id,paper_eq,tolerance,terms_needed,achieved_error,wall_time_ns";

#[derive(Serialize)]
struct Row<'a> {
    id: String,
    paper_eq: &'a str,
    tolerance: f64,
    terms_needed: u64,
    achieved_error: f64,
    wall_time_ns: u64,
}

impl<'a> From<&'a ConvergenceProfile> for Row<'a> {
    fn from(p: &'a ConvergenceProfile) -> Self {
        Row {
            id: p.key.to_string(),
            paper_eq: p.paper_eq,
            tolerance: p.tolerance,
            terms_needed: p.terms_needed,
            achieved_error: p.achieved_error,
            wall_time_ns: p.wall_time.as_nanos().min(u64::MAX as u128) as u64,
        }
    }
}

/// Renders a table. CSV floats carry 17 significant digits; JSON uses the
/// shortest round-trip form; markdown shows 16 digits.
pub fn export(table: &[ConvergenceProfile], format: ExportFormat) -> String {
    let rows: Vec<Row> = table.iter().map(Row::from).collect();
    let mut out = String::new();
    match format {
        ExportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_HEADER.split(','))
                .expect("in-memory write");
            for r in &rows {
                w.write_record([
                    r.id.clone(),
                    r.paper_eq.to_string(),
                    format!("{:.16e}", r.tolerance),
                    r.terms_needed.to_string(),
                    format!("{:.16e}", r.achieved_error),
                    r.wall_time_ns.to_string(),
                ])
                .expect("in-memory write");
            }
            let bytes = w.into_inner().expect("in-memory flush");
            out = String::from_utf8(bytes).expect("utf-8 fields");
        }
        ExportFormat::Json => {
            out = serde_json::to_string_pretty(&rows).expect("rows serialize");
            out.push('\n');
        }
        ExportFormat::Markdown => {
            out.push_str(
                "| id | paper_eq | tolerance | terms_needed | achieved_error | wall_time_ns |\n",
            );
            out.push_str("|---|---|---:|---:|---:|---:|\n");
            for r in &rows {
                let _ = writeln!(
                    out,
                    "| {} | {} | {:.15e} | {} | {:.15e} | {} |",
                    r.id, r.paper_eq, r.tolerance, r.terms_needed, r.achieved_error, r.wall_time_ns
                );
            }
        }
    }
    out
}
