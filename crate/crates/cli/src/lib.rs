//! Library side of the `taukit` command line: parameter schemas, the suite
//! registry, and report rendering. The binary is a thin clap wrapper.

pub mod expr;
pub mod params;
pub mod report;
pub mod suites;

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use taukit_core::error::Error as CoreError;
use taukit_core::kspaces::{tau_checked, DecomposedClass, KClassPn};

use params::Params;
use report::Report;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug)]
pub enum CliError {
    /// Bad input: unknown suite, malformed or out-of-range parameter.
    Config(String),
    /// An internal consistency check failed while computing.
    Invariant(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Invariant(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "configuration error: {m}"),
            CliError::Invariant(m) => write!(f, "invariant violation: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        if e.is_invariant_violation() {
            CliError::Invariant(e.to_string())
        } else {
            CliError::Config(e.to_string())
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteInfo {
    pub name: &'static str,
    pub statement: &'static str,
    pub params: Vec<String>,
}

/// All suites in registry order.
pub fn list_suites() -> Vec<SuiteInfo> {
    suites::SUITES
        .iter()
        .map(|s| SuiteInfo {
            name: s.name,
            statement: s.statement,
            params: s.params.iter().map(|p| p.describe()).collect(),
        })
        .collect()
}

pub struct SuiteConfig {
    pub suite: String,
    pub params: Vec<(String, String)>,
    pub seed: u64,
    /// Overrides the suite's `bound` parameter.
    pub bound: Option<u32>,
}

pub fn run_suite(config: &SuiteConfig) -> Result<Report, CliError> {
    let suite = suites::find(&config.suite).ok_or_else(|| {
        let names: Vec<&str> = suites::SUITES.iter().map(|s| s.name).collect();
        CliError::Config(format!("unknown suite {}; available: {}", config.suite, names.join(", ")))
    })?;
    let mut given = config.params.clone();
    if let Some(b) = config.bound {
        if !suite.params.iter().any(|p| p.key == "bound") {
            return Err(CliError::Config(format!("suite {} takes no degree bound", suite.name)));
        }
        if given.iter().any(|(k, _)| k == "bound") {
            return Err(CliError::Config("bound given both as --bound and --param".into()));
        }
        given.push(("bound".into(), b.to_string()));
    }
    let params = Params::resolve(suite.params, &given, config.seed)?;
    let start = Instant::now();
    let tasks = (suite.build)(&params);
    let results: Vec<_> = tasks.par_iter().map(|t| t()).collect();
    let mut checks = Vec::new();
    for r in results {
        checks.extend(r?.into_iter().map(Into::into));
    }
    Ok(Report {
        suite: suite.name.to_string(),
        params,
        checks,
        elapsed: start.elapsed().as_micros() as u64,
        version: VERSION.to_string(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TauResult {
    pub l: usize,
    pub n: usize,
    pub class: String,
    pub tau: String,
}

/// Largest tensor power accepted by `compute tau`.
pub const TAU_MAX_L: usize = 6;

/// `tau^l` of a class in `K_0(P^n)` written in the grammar of [`expr`].
pub fn compute_tau(l: usize, n: usize, class: &str) -> Result<TauResult, CliError> {
    if l > TAU_MAX_L {
        return Err(CliError::Config(format!("l = {l} exceeds {TAU_MAX_L}")));
    }
    if n > 4 {
        return Err(CliError::Config(format!("n = {n} exceeds 4")));
    }
    let terms = expr::parse_class(class).map_err(|e| CliError::Config(format!("class {class}: {e}")))?;
    let mut x = KClassPn::zero(n);
    for (e, c) in terms {
        x = x.add(&KClassPn::h_pow(n, e).scale(&taukit_core::exact_arith::Rational::from_integer(c.into())));
    }
    let decomposed = DecomposedClass::from_class(&x)?;
    let tau = tau_checked(&decomposed, l)?;
    Ok(TauResult { l, n, class: x.to_string(), tau: tau.to_string() })
}
