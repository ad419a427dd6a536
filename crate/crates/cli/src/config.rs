use std::path::PathBuf;

use clap::ValueEnum;

use crate::{CliError, Common, MAX_TERMS_ENV};

pub const DEFAULT_TOLERANCE: f64 = 1e-10;
pub const DEFAULT_PARAM_LIMIT: u32 = 12;
pub const TOLERANCE_RANGE: (f64, f64) = (1e-13, 1e-2);
pub const PARAM_LIMIT_RANGE: (u32, u32) = (1, 64);

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Markdown,
    Text,
}

/// Validated shared settings.
#[derive(Debug, Clone, PartialEq)]
pub struct CliConfig {
    pub tolerance: f64,
    pub param_limit: u32,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub max_terms: u64,
}

impl Default for CliConfig {
    fn default() -> Self {
        Self {
            tolerance: DEFAULT_TOLERANCE,
            param_limit: DEFAULT_PARAM_LIMIT,
            format: Format::Text,
            out: None,
            max_terms: zetakit::verifier::MAX_TERMS,
        }
    }
}

impl CliConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        let (lo, hi) = TOLERANCE_RANGE;
        if !(self.tolerance >= lo && self.tolerance <= hi) {
            return Err(CliError::usage(format!(
                "--tol must lie in [{lo:e}, {hi:e}], got {}",
                self.tolerance
            )));
        }
        let (lo, hi) = PARAM_LIMIT_RANGE;
        if !(lo..=hi).contains(&self.param_limit) {
            return Err(CliError::usage(format!(
                "--param-limit must lie in [{lo}, {hi}], got {}",
                self.param_limit
            )));
        }
        if self.max_terms == 0 {
            return Err(CliError::usage(format!("{MAX_TERMS_ENV} must be positive")));
        }
        Ok(())
    }

    /// Builds and validates a config from flags and the environment.
    pub fn from_common(common: &Common) -> Result<Self, CliError> {
        let max_terms = match std::env::var(MAX_TERMS_ENV) {
            Ok(v) => v.trim().parse().map_err(|_| {
                CliError::usage(format!(
                    "{MAX_TERMS_ENV} must be a positive integer, got {v:?}"
                ))
            })?,
            Err(_) => zetakit::verifier::MAX_TERMS,
        };
        let cfg = Self {
            tolerance: common.tolerance,
            param_limit: common.param_limit,
            format: common.format,
            out: common.out.clone(),
            max_terms,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}
