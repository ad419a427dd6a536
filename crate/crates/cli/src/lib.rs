//! Argument parsing and dispatch for the `zetakit` binary.

mod commands;
pub mod config;
mod output;

use std::ffi::OsString;
use std::fmt;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use config::{CliConfig, Format};

/// Process exit status.
pub mod exit {
    pub const OK: i32 = 0;
    pub const FAILURE: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const INCONCLUSIVE: i32 = 3;
}

/// Environment variable overriding the default term cap.
pub const MAX_TERMS_ENV: &str = "ZETAKIT_MAX_TERMS";

#[derive(Debug, Parser)]
#[command(
    name = "zetakit",
    version,
    about = "Zeta-series identities: evaluate, verify, profile"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct Common {
    /// Absolute tolerance, in [1e-13, 1e-2].
    #[arg(long = "tol", global = true, default_value_t = config::DEFAULT_TOLERANCE)]
    pub tolerance: f64,
    /// Largest family parameter, in [1, 64].
    #[arg(long, global = true, default_value_t = config::DEFAULT_PARAM_LIMIT)]
    pub param_limit: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to a file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a constant or special function.
    Compute {
        #[command(subcommand)]
        constant: Constant,
        #[command(flatten)]
        common: Common,
    },
    /// Check catalog identities against their closed forms.
    Verify {
        /// Every catalog entry, families up to --param-limit.
        #[arg(long, conflicts_with = "id")]
        all: bool,
        /// A single catalog or integral identity id.
        #[arg(long)]
        id: Option<String>,
        /// Family parameter m.
        #[arg(long, requires = "id", conflicts_with = "k")]
        m: Option<u32>,
        /// Family parameter k.
        #[arg(long, requires = "id")]
        k: Option<u32>,
        /// Also check the log-trigonometric integral identities.
        #[arg(long)]
        integrals: bool,
        /// Also run the Cl2 method cross-check.
        #[arg(long)]
        clausen: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Rank identities by the terms needed to reach a tolerance.
    Converge {
        /// zeta3, catalan-relations or all.
        #[arg(long, default_value = "zeta3")]
        target: String,
        #[command(flatten)]
        common: Common,
    },
    /// Dump the identity registry.
    List {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Subcommand, Clone)]
pub enum Constant {
    /// Riemann zeta(s), s != 1.
    Zeta {
        #[arg(allow_hyphen_values = true)]
        s: f64,
    },
    /// zeta(3) via a catalog series or Euler-Maclaurin (`direct`).
    Zeta3 {
        /// direct, apery, ck, ewell, a catalog id such as ZETA3_17, or 12..20.
        #[arg(long, default_value = "direct")]
        method: String,
    },
    /// Catalan's constant G = beta(2).
    Catalan,
    /// Euler's constant gamma.
    Gamma,
    /// Dirichlet beta(s).
    Beta {
        #[arg(allow_hyphen_values = true)]
        s: f64,
    },
    /// Clausen function Cl2(theta), theta in radians.
    Cl2 {
        #[arg(allow_hyphen_values = true)]
        angle: Option<f64>,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "angle")]
        theta: Option<f64>,
        /// direct, accel, peeled, wzl or auto.
        #[arg(long, default_value = "auto")]
        method: String,
    },
    /// zeta_E(2k)(1 - 4^-k); k = 0 gives pi/4.
    #[command(name = "zetaE")]
    ZetaE { k: u32 },
}

/// Failure carrying its exit status.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            code: exit::USAGE,
            message: message.into(),
        }
    }

    pub fn failure(message: impl Into<String>) -> Self {
        Self {
            code: exit::FAILURE,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<zetakit::Error> for CliError {
    fn from(e: zetakit::Error) -> Self {
        let code = match e {
            zetakit::Error::Inconclusive { .. } => exit::INCONCLUSIVE,
            _ => exit::USAGE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit status. Diagnostics go to standard error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                exit::USAGE
            } else {
                exit::OK
            };
        }
    };
    match commands::dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("zetakit: {e}");
            e.code
        }
    }
}
