//! Configuration, commands and JSON reports for the `confblocks` binary.

pub mod commands;
pub mod config;
pub mod report;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error(transparent)]
    Library(#[from] confblocks::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub const STRATUM_CAP_ENV: &str = "CONFBLOCKS_STRATUM_CAP";
pub const MONOMIAL_CEILING_ENV: &str = "CONFBLOCKS_MONOMIAL_CEILING";

/// Limits and switches shared by all commands.
#[derive(Clone, Debug)]
pub struct Options {
    pub stratum_cap: usize,
    pub monomial_ceiling: u128,
    pub seed: u64,
    pub suite: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            stratum_cap: confblocks::admissible::AdmissibleOptions::default().stratum_cap,
            monomial_ceiling: confblocks::degreelab::DEFAULT_MONOMIAL_CEILING,
            seed: confblocks::admissible::AdmissibleOptions::default().seed,
            suite: false,
        }
    }
}

fn env_number<T: std::str::FromStr>(name: &str) -> Result<Option<T>, CliError> {
    match std::env::var(name) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| CliError::Config(format!("{name} is not a number: {v:?}"))),
        Err(_) => Ok(None),
    }
}

impl Options {
    /// Flags override environment variables, which override the config file.
    pub fn resolve(
        cfg: &config::RunConfig,
        stratum_cap: Option<usize>,
        monomial_ceiling: Option<u128>,
        suite: bool,
    ) -> Result<Self, CliError> {
        let d = Options::default();
        Ok(Options {
            stratum_cap: stratum_cap
                .or(env_number(STRATUM_CAP_ENV)?)
                .or(cfg.stratum_cap)
                .unwrap_or(d.stratum_cap),
            monomial_ceiling: monomial_ceiling
                .or(env_number(MONOMIAL_CEILING_ENV)?)
                .or(cfg.monomial_ceiling)
                .unwrap_or(d.monomial_ceiling),
            seed: cfg.seed.unwrap_or(d.seed),
            suite,
        })
    }
}
