use crate::CliError;
use confblocks::blocks::{default_points, BlockInstance};
use confblocks::linalg::{parse_q, Q};
use confblocks::rootsys::{self, Weight};
use num::BigInt;
use serde::Deserialize;
use std::path::Path;

/// An exact rational written as an integer, a `"p/q"` string or a `[p, q]` pair.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Rational {
    Int(i64),
    Text(String),
    Pair([i64; 2]),
}

impl Rational {
    pub fn to_q(&self) -> Result<Q, CliError> {
        match self {
            Rational::Int(n) => Ok(Q::from_integer(BigInt::from(*n))),
            Rational::Text(s) => parse_q(s).ok_or_else(|| CliError::Config(format!("bad rational {s:?}"))),
            Rational::Pair([p, q]) if *q != 0 => Ok(Q::new(BigInt::from(*p), BigInt::from(*q))),
            Rational::Pair(_) => Err(CliError::Config("zero denominator".into())),
        }
    }
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub algebra: Option<String>,
    pub level: Option<u64>,
    #[serde(default)]
    pub weights: Vec<Vec<i64>>,
    pub points: Option<Vec<Rational>>,
    /// 1-based simple-root indices.
    pub coloring: Option<Vec<usize>>,
    pub stratum_cap: Option<usize>,
    pub monomial_ceiling: Option<u128>,
    pub seed: Option<u64>,
    pub logbasis: Option<LogBasisConfig>,
    pub residue: Option<ResidueConfig>,
    pub problem: Option<ProblemConfig>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LogBasisConfig {
    pub m: usize,
    pub n: usize,
}

/// A basis form `Ω(π)` and an ordered list of divisors such as `"t2=t1"` or `"t1=z1"`.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResidueConfig {
    pub partition: String,
    pub divisors: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemConfig {
    #[serde(default = "default_problem_name")]
    pub name: String,
    pub variables: Vec<String>,
    #[serde(default)]
    pub blocks: Vec<Vec<String>>,
    pub diagonals: Vec<Vec<String>>,
    pub bound: u32,
}

fn default_problem_name() -> String {
    "problem".into()
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        RunConfig::parse(&text)
    }

    pub fn points(&self) -> Result<Option<Vec<Q>>, CliError> {
        self.points.as_ref().map(|ps| ps.iter().map(Rational::to_q).collect()).transpose()
    }

    /// The block instance described by `algebra`, `level`, `weights` and `points`.
    pub fn instance(&self) -> Result<BlockInstance, CliError> {
        let name = self.algebra.as_deref().ok_or_else(|| CliError::Config("missing `algebra`".into()))?;
        let k = self.level.ok_or_else(|| CliError::Config("missing `level`".into()))?;
        if self.weights.is_empty() {
            return Err(CliError::Config("missing `weights`".into()));
        }
        let rs = rootsys::root_system(name)?;
        let weights = self.weights.iter().map(|w| Weight::new(w)).collect::<Result<Vec<_>, _>>()?;
        let points = self.points()?.unwrap_or_else(|| default_points(weights.len()));
        Ok(BlockInstance::new(rs, k, weights, points)?)
    }

    /// The explicit coloring converted to 0-based indices.
    pub fn coloring(&self, rank: usize) -> Result<Option<Vec<usize>>, CliError> {
        let Some(c) = &self.coloring else {
            return Ok(None);
        };
        c.iter()
            .map(|&i| {
                if i == 0 || i > rank {
                    Err(CliError::Config(format!("coloring index {i} outside 1..={rank}")))
                } else {
                    Ok(i - 1)
                }
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Some)
    }
}
