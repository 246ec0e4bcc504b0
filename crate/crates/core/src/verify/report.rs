//! Law tallies, counterexamples and the per-suite report.

use crate::error::Result;
use serde::Serialize;
use serde_json::{json, Value};

/// Counterexamples kept per suite; the failure counter keeps counting.
pub const MAX_COUNTEREXAMPLES: usize = 10;
/// Refuting instances kept per observation.
pub const MAX_OBSERVATION_EXAMPLES: usize = 3;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    /// Sub-seed of the trial that produced the instance.
    pub seed: u64,
    pub trial: u64,
    pub law: String,
    pub inputs: Value,
    pub expected: Value,
    pub actual: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LawTally {
    pub law: String,
    pub checks: u64,
    pub failures: u64,
}

/// A claim that is probed but not asserted, because it is known not to hold
/// universally. `holds` counts the instances where it did.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Observation {
    pub law: String,
    pub checks: u64,
    pub holds: u64,
    pub refutations: Vec<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub trials: u64,
    pub failures: u64,
    pub gens: usize,
    pub seed: u64,
    pub laws: Vec<LawTally>,
    pub counterexamples: Vec<Counterexample>,
    pub observations: Vec<Observation>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn law(&self, name: &str) -> Option<&LawTally> {
        self.laws.iter().find(|l| l.law == name)
    }

    pub fn observation(&self, name: &str) -> Option<&Observation> {
        self.observations.iter().find(|o| o.law == name)
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

#[derive(Debug)]
enum Record {
    Law {
        law: &'static str,
        failure: Option<Counterexample>,
    },
    Observation {
        law: &'static str,
        refutation: Option<Counterexample>,
    },
}

/// Check results gathered while running one trial.
#[derive(Debug)]
pub struct Checks {
    seed: u64,
    trial: u64,
    records: Vec<Record>,
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).unwrap_or_else(|e| json!({ "unserializable": e.to_string() }))
}

impl Checks {
    pub fn new(seed: u64, trial: u64) -> Self {
        Checks {
            seed,
            trial,
            records: Vec::new(),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn trial(&self) -> u64 {
        self.trial
    }

    fn counterexample(&self, law: &str, inputs: Value, expected: Value, actual: Value) -> Counterexample {
        Counterexample {
            seed: self.seed,
            trial: self.trial,
            law: law.to_string(),
            inputs,
            expected,
            actual,
        }
    }

    /// Exact equality law.
    pub fn eq<T, F>(&mut self, law: &'static str, expected: &T, actual: &T, inputs: F) -> bool
    where
        T: PartialEq + Serialize,
        F: FnOnce() -> Value,
    {
        let ok = expected == actual;
        let failure =
            (!ok).then(|| self.counterexample(law, inputs(), to_value(expected), to_value(actual)));
        self.records.push(Record::Law { law, failure });
        ok
    }

    /// Boolean law.
    pub fn holds<F>(&mut self, law: &'static str, ok: bool, inputs: F) -> bool
    where
        F: FnOnce() -> Value,
    {
        let failure = (!ok).then(|| self.counterexample(law, inputs(), json!(true), json!(false)));
        self.records.push(Record::Law { law, failure });
        ok
    }

    /// A law whose computation must succeed; an error counts as a failure.
    pub fn ok<T, F>(&mut self, law: &'static str, result: Result<T>, inputs: F) -> Option<T>
    where
        F: FnOnce() -> Value,
    {
        match result {
            Ok(v) => Some(v),
            Err(e) => {
                let failure = Some(self.counterexample(
                    law,
                    inputs(),
                    json!("ok"),
                    json!({ "error": e.code() }),
                ));
                self.records.push(Record::Law { law, failure });
                None
            }
        }
    }

    /// Probe of a claim that is reported but never counted as a failure.
    pub fn observe<F>(&mut self, law: &'static str, ok: bool, inputs: F)
    where
        F: FnOnce() -> Value,
    {
        let refutation =
            (!ok).then(|| self.counterexample(law, inputs(), json!(true), json!(false)));
        self.records.push(Record::Observation { law, refutation });
    }
}

/// Folds trial checks, in trial order, into a [`SuiteReport`].
#[derive(Debug)]
pub struct ReportBuilder {
    report: SuiteReport,
}

impl ReportBuilder {
    pub fn new(suite: &str, gens: usize, seed: u64, trials: u64) -> Self {
        ReportBuilder {
            report: SuiteReport {
                suite: suite.to_string(),
                trials,
                failures: 0,
                gens,
                seed,
                laws: Vec::new(),
                counterexamples: Vec::new(),
                observations: Vec::new(),
            },
        }
    }

    pub fn absorb(&mut self, checks: Checks) {
        let r = &mut self.report;
        for record in checks.records {
            match record {
                Record::Law { law, failure } => {
                    let idx = match r.laws.iter().position(|l| l.law == law) {
                        Some(i) => i,
                        None => {
                            r.laws.push(LawTally {
                                law: law.to_string(),
                                checks: 0,
                                failures: 0,
                            });
                            r.laws.len() - 1
                        }
                    };
                    let tally = &mut r.laws[idx];
                    tally.checks += 1;
                    if let Some(cx) = failure {
                        tally.failures += 1;
                        r.failures += 1;
                        if r.counterexamples.len() < MAX_COUNTEREXAMPLES {
                            r.counterexamples.push(cx);
                        }
                    }
                }
                Record::Observation { law, refutation } => {
                    let idx = match r.observations.iter().position(|o| o.law == law) {
                        Some(i) => i,
                        None => {
                            r.observations.push(Observation {
                                law: law.to_string(),
                                checks: 0,
                                holds: 0,
                                refutations: Vec::new(),
                            });
                            r.observations.len() - 1
                        }
                    };
                    let obs = &mut r.observations[idx];
                    obs.checks += 1;
                    match refutation {
                        None => obs.holds += 1,
                        Some(cx) if obs.refutations.len() < MAX_OBSERVATION_EXAMPLES => {
                            obs.refutations.push(cx)
                        }
                        Some(_) => {}
                    }
                }
            }
        }
    }

    pub fn finish(self) -> SuiteReport {
        self.report
    }
}
