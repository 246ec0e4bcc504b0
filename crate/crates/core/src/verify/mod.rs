//! Seeded verification suites.
//!
//! Every trial draws its inputs from a sampler seeded with
//! `trial_seed(master, suite, index)`, so a trial can be rerun on its own and
//! reports do not depend on how trials are spread over workers.

pub mod report;
mod suites;

use crate::grassmann::MAX_GENERATORS;
use crate::sample::Sampler;
use rayon::prelude::*;
use report::{Checks, ReportBuilder, SuiteReport};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

pub use suites::{band_alphas, generator_relations};

pub const DEFAULT_GENS: usize = 4;
pub const DEFAULT_TRIALS: u64 = 1000;
pub const DEFAULT_SEED: u64 = 42;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Suite {
    Kernel,
    Berezinian,
    Invertibility,
    Transposes,
    Tsg,
    Bands,
    Rees,
    Sqrt,
    Tables,
    SandwichSet,
    Scalars,
    AntiTranspose,
    ModuleLaws,
    Star,
    Eigen,
    CayleyHamilton,
}

impl Suite {
    pub const ALL: [Suite; 16] = [
        Suite::Kernel,
        Suite::Berezinian,
        Suite::Invertibility,
        Suite::Transposes,
        Suite::Tsg,
        Suite::Bands,
        Suite::Rees,
        Suite::Sqrt,
        Suite::Tables,
        Suite::SandwichSet,
        Suite::Scalars,
        Suite::AntiTranspose,
        Suite::ModuleLaws,
        Suite::Star,
        Suite::Eigen,
        Suite::CayleyHamilton,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Kernel => "kernel",
            Suite::Berezinian => "berezinian",
            Suite::Invertibility => "invertibility",
            Suite::Transposes => "transposes",
            Suite::Tsg => "tsg",
            Suite::Bands => "bands",
            Suite::Rees => "rees",
            Suite::Sqrt => "sqrt",
            Suite::Tables => "tables",
            Suite::SandwichSet => "sandwich-set",
            Suite::Scalars => "scalars",
            Suite::AntiTranspose => "anti-transpose",
            Suite::ModuleLaws => "module-laws",
            Suite::Star => "star",
            Suite::Eigen => "eigen",
            Suite::CayleyHamilton => "cayley-hamilton",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, ConfigError> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| ConfigError::UnknownSuite(s.to_string()))
    }
}

#[derive(Error, Clone, PartialEq, Eq, Debug)]
pub enum ConfigError {
    #[error("generator count {0} outside 1..={MAX_GENERATORS}")]
    GensOutOfRange(usize),
    #[error("trial count must be at least 1")]
    ZeroTrials,
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("no suites selected")]
    NoSuites,
    #[error("worker count must be at least 1")]
    ZeroJobs,
}

/// Parses `all` or a comma-separated list of suite names.
pub fn parse_suites(spec: &str) -> Result<Vec<Suite>, ConfigError> {
    let mut out = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if part == "all" {
            out.extend(Suite::ALL);
        } else {
            out.push(part.parse()?);
        }
    }
    let mut seen = std::collections::BTreeSet::new();
    out.retain(|s| seen.insert(*s));
    if out.is_empty() {
        return Err(ConfigError::NoSuites);
    }
    Ok(out)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RunConfig {
    pub gens: usize,
    pub trials: u64,
    pub seed: u64,
    pub suites: Vec<Suite>,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            gens: DEFAULT_GENS,
            trials: DEFAULT_TRIALS,
            seed: DEFAULT_SEED,
            suites: Suite::ALL.to_vec(),
            jobs: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(1..=MAX_GENERATORS).contains(&self.gens) {
            return Err(ConfigError::GensOutOfRange(self.gens));
        }
        if self.trials == 0 {
            return Err(ConfigError::ZeroTrials);
        }
        if self.suites.is_empty() {
            return Err(ConfigError::NoSuites);
        }
        if self.jobs == Some(0) {
            return Err(ConfigError::ZeroJobs);
        }
        Ok(())
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

/// Sub-seed of trial `index` of `suite` under `master`.
pub fn trial_seed(master: u64, suite: &str, index: u64) -> u64 {
    splitmix64(splitmix64(master ^ fnv1a(suite)) ^ splitmix64(index))
}

/// What a trial function sees besides its sampler.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Trial {
    pub gens: usize,
    pub master: u64,
    pub index: u64,
}

fn run_trial(suite: Suite, gens: usize, master: u64, index: u64) -> Checks {
    let seed = trial_seed(master, suite.name(), index);
    let mut sampler = Sampler::new(gens, seed);
    let mut checks = Checks::new(seed, index);
    let trial = Trial { gens, master, index };
    suites::trial_fn(suite)(&trial, &mut sampler, &mut checks);
    checks
}

fn fold(suite: Suite, gens: usize, master: u64, indices: impl Iterator<Item = u64>, all: Vec<Checks>) -> SuiteReport {
    let count = indices.count() as u64;
    let mut builder = ReportBuilder::new(suite.name(), gens, master, count);
    for checks in all {
        builder.absorb(checks);
    }
    builder.finish()
}

/// Runs `trials` trials of one suite on the current rayon pool. Checks are
/// absorbed in trial order.
pub fn run_suite(suite: Suite, gens: usize, seed: u64, trials: u64) -> SuiteReport {
    let all: Vec<Checks> = (0..trials)
        .into_par_iter()
        .map(|i| run_trial(suite, gens, seed, i))
        .collect();
    fold(suite, gens, seed, 0..trials, all)
}

/// Runs every configured suite, in the configured order.
pub fn run(config: &RunConfig) -> Result<Vec<SuiteReport>, ConfigError> {
    config.validate()?;
    let go = || {
        config
            .suites
            .iter()
            .map(|&s| run_suite(s, config.gens, config.seed, config.trials))
            .collect()
    };
    Ok(match config.jobs {
        None => go(),
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool")
            .install(go),
    })
}

/// Reruns a single trial. The report's counterexamples carry the same seed,
/// trial index and payloads as in the full run.
pub fn replay(suite: Suite, gens: usize, seed: u64, trial: u64) -> Result<SuiteReport, ConfigError> {
    if !(1..=MAX_GENERATORS).contains(&gens) {
        return Err(ConfigError::GensOutOfRange(gens));
    }
    let checks = run_trial(suite, gens, seed, trial);
    Ok(fold(suite, gens, seed, std::iter::once(trial), vec![checks]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!(
            "bogus".parse::<Suite>(),
            Err(ConfigError::UnknownSuite("bogus".into()))
        );
    }

    #[test]
    fn suite_lists() {
        assert_eq!(parse_suites("all").unwrap().len(), 16);
        assert_eq!(
            parse_suites("eigen, tsg,eigen").unwrap(),
            vec![Suite::Eigen, Suite::Tsg]
        );
        assert!(parse_suites("tsg,bogus").is_err());
        assert_eq!(parse_suites(""), Err(ConfigError::NoSuites));
    }

    #[test]
    fn config_validation() {
        let ok = RunConfig::default();
        assert!(ok.validate().is_ok());
        for bad in [
            RunConfig { gens: 0, ..ok.clone() },
            RunConfig { gens: 17, ..ok.clone() },
            RunConfig { trials: 0, ..ok.clone() },
            RunConfig { suites: vec![], ..ok.clone() },
            RunConfig { jobs: Some(0), ..ok.clone() },
        ] {
            assert!(bad.validate().is_err());
        }
    }

    #[test]
    fn seeds_separate_suites_and_trials() {
        let a = trial_seed(42, "tsg", 0);
        assert_ne!(a, trial_seed(42, "tsg", 1));
        assert_ne!(a, trial_seed(42, "bands", 0));
        assert_ne!(a, trial_seed(43, "tsg", 0));
        assert_eq!(a, trial_seed(42, "tsg", 0));
    }

    #[test]
    fn every_suite_passes_briefly() {
        for s in Suite::ALL {
            for gens in [1, 2, 4] {
                let r = run_suite(s, gens, 7, 12);
                assert!(r.passed(), "{}", r.to_json_line());
                assert_eq!(r.trials, 12);
            }
        }
    }
}
