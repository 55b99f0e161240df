//! Deterministic random sweep over the catalog.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{self, CheckConfig, Instance, CASES};
use crate::error::{Error, Result};
use crate::linalg::Tolerance;
use crate::numrad::DEFAULT_EPS;
use crate::verdict::{Relation, Status, Verdict};

use super::generators::{instance_for_case, DEFAULT_FILL};

pub const RNG_NAME: &str = "ChaCha8Rng seeded by SplitMix64(FNV-1a-64(case_id), master_seed, trial)";
pub const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
pub const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;
pub const SPLITMIX_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;
pub const SPLITMIX_MUL1: u64 = 0xBF58_476D_1CE4_E5B9;
pub const SPLITMIX_MUL2: u64 = 0x94D0_49BB_1331_11EB;

fn fnv1a(text: &str) -> u64 {
    text.bytes().fold(FNV_OFFSET, |h, b| (h ^ u64::from(b)).wrapping_mul(FNV_PRIME))
}

fn splitmix(x: u64) -> u64 {
    let mut z = x.wrapping_add(SPLITMIX_GAMMA);
    z = (z ^ (z >> 30)).wrapping_mul(SPLITMIX_MUL1);
    z = (z ^ (z >> 27)).wrapping_mul(SPLITMIX_MUL2);
    z ^ (z >> 31)
}

/// Seed of trial `index` of `case_id`; independent of every other case.
pub fn trial_seed(master_seed: u64, case_id: &str, index: u64) -> u64 {
    splitmix(splitmix(splitmix(master_seed) ^ fnv1a(case_id)) ^ index)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub master_seed: u64,
    pub trials: u64,
    pub dims: Vec<usize>,
    pub tol: Tolerance,
    pub eps: f64,
    /// Only cases whose id starts with this prefix.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case_filter: Option<String>,
    pub fill: f64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            master_seed: 0,
            trials: 10_000,
            dims: (2..=6).collect(),
            tol: Tolerance::default(),
            eps: DEFAULT_EPS,
            case_filter: None,
            fill: DEFAULT_FILL,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.dims.is_empty() || self.dims.iter().any(|&n| !(2..=64).contains(&n)) {
            return Err(Error::InvalidParameter(format!("dims must be non-empty and lie in [2, 64], got {:?}", self.dims)));
        }
        if !(self.fill > 0.0 && self.fill <= 1.0) {
            return Err(Error::InvalidParameter(format!("fill must lie in (0, 1], got {}", self.fill)));
        }
        if !(self.eps > 0.0) {
            return Err(Error::InvalidParameter(format!("eps must be positive, got {}", self.eps)));
        }
        Ok(())
    }

    pub fn selected_cases(&self) -> Vec<&'static str> {
        CASES
            .iter()
            .map(|c| c.id)
            .filter(|id| self.case_filter.as_deref().is_none_or(|f| id.starts_with(f)))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub case_id: String,
    pub trials: u64,
    pub hyp_met: u64,
    pub pass: u64,
    pub fail: u64,
    /// Equivalence checks that disagreed only inside the tie band; counted in `pass` as well.
    pub boundary: u64,
    pub errors: u64,
    /// Trials where an informational sub-check did not hold.
    pub info_fail: u64,
    /// Smallest normalized slack over met trials; not reported for equivalence checks.
    pub min_slack: Option<f64>,
    pub argmin_seed: Option<u64>,
}

impl CaseReport {
    fn empty(case_id: &str) -> Self {
        Self {
            case_id: case_id.to_string(),
            trials: 0,
            hyp_met: 0,
            pass: 0,
            fail: 0,
            boundary: 0,
            errors: 0,
            info_fail: 0,
            min_slack: None,
            argmin_seed: None,
        }
    }

    /// Associative and commutative; ties on slack go to the smaller seed.
    pub fn merge(mut self, other: &CaseReport) -> Self {
        self.trials += other.trials;
        self.hyp_met += other.hyp_met;
        self.pass += other.pass;
        self.fail += other.fail;
        self.boundary += other.boundary;
        self.errors += other.errors;
        self.info_fail += other.info_fail;
        if let (Some(s), Some(seed)) = (other.min_slack, other.argmin_seed) {
            let better = match (self.min_slack, self.argmin_seed) {
                (Some(cur), Some(cur_seed)) => s < cur || (s == cur && seed < cur_seed),
                _ => true,
            };
            if better {
                self.min_slack = Some(s);
                self.argmin_seed = Some(seed);
            }
        }
        self
    }
}

/// A failing or erroring trial, stored with everything needed to replay it.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TrialRecord {
    pub case_id: String,
    pub trial: u64,
    pub seed: u64,
    pub dim: usize,
    pub instance: Instance,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Environment {
    pub crate_version: String,
    pub rng: String,
    pub fnv_offset: String,
    pub fnv_prime: String,
    pub splitmix_constants: [String; 3],
    pub instance_distribution: String,
}

impl Environment {
    fn current() -> Self {
        let hex = |x: u64| format!("{x:#018x}");
        Self {
            crate_version: env!("CARGO_PKG_VERSION").to_string(),
            rng: RNG_NAME.to_string(),
            fnv_offset: hex(FNV_OFFSET),
            fnv_prime: hex(FNV_PRIME),
            splitmix_constants: [hex(SPLITMIX_GAMMA), hex(SPLITMIX_MUL1), hex(SPLITMIX_MUL2)],
            instance_distribution: "complex Gaussian directions scaled into the hypothesis disk; \
                                    mu log-uniform on [0.2, 5]; r/mu uniform on [0.05, 0.98], [0.7072, 0.995] for two disks"
                .to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub environment: Environment,
    pub cases: Vec<CaseReport>,
    pub failures: Vec<TrialRecord>,
    pub errors: Vec<TrialRecord>,
}

impl SweepReport {
    pub fn total_failures(&self) -> u64 {
        self.cases.iter().map(|c| c.fail).sum()
    }

    pub fn case(&self, id: &str) -> Option<&CaseReport> {
        self.cases.iter().find(|c| c.case_id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("case_id,trials,hyp_met,pass,fail,min_slack,argmin_seed\n");
        for c in &self.cases {
            let slack = c.min_slack.map(|s| format!("{s:e}")).unwrap_or_default();
            let seed = c.argmin_seed.map(|s| s.to_string()).unwrap_or_default();
            out.push_str(&format!("{},{},{},{},{},{},{}\n", c.case_id, c.trials, c.hyp_met, c.pass, c.fail, slack, seed));
        }
        out
    }
}

/// Sizes the global worker pool; call before the first sweep.
pub fn set_threads(n: usize) -> Result<()> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))
}

struct Outcome {
    summary: CaseReport,
    record: Option<TrialRecord>,
}

/// Rebuilds the instance of one trial.
pub fn trial_instance(config: &SweepConfig, case_id: &str, index: u64) -> Result<(u64, usize, Instance)> {
    let seed = trial_seed(config.master_seed, case_id, index);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = config.dims[rng.random_range(0..config.dims.len())];
    let mut inst = instance_for_case(&mut rng, case_id, n, config.fill)?;
    inst.aux_seed = Some(rng.random());
    Ok((seed, n, inst))
}

fn run_trial(config: &SweepConfig, cfg: &CheckConfig, case_id: &str, index: u64) -> Outcome {
    let mut summary = CaseReport::empty(case_id);
    summary.trials = 1;
    let (seed, n, inst) = match trial_instance(config, case_id, index) {
        Ok(t) => t,
        Err(e) => {
            summary.errors = 1;
            let seed = trial_seed(config.master_seed, case_id, index);
            let record = TrialRecord {
                case_id: case_id.to_string(),
                trial: index,
                seed,
                dim: 0,
                instance: Instance::new(crate::linalg::Matrix::identity(1)),
                verdict: None,
                error: Some(format!("generator: {e}")),
            };
            return Outcome { summary, record: Some(record) };
        }
    };
    let record = |verdict: Option<Verdict>, error: Option<String>| TrialRecord {
        case_id: case_id.to_string(),
        trial: index,
        seed,
        dim: n,
        instance: inst.clone(),
        verdict,
        error,
    };
    match catalog::evaluate(case_id, &inst, cfg) {
        Err(e) => {
            summary.errors = 1;
            Outcome { summary, record: Some(record(None, Some(e.to_string()))) }
        }
        Ok(v) => {
            if !v.hypothesis_met {
                return Outcome { summary, record: None };
            }
            summary.hyp_met = 1;
            summary.info_fail = u64::from(v.informational_failures() > 0);
            if v.relation != Relation::Equivalence && v.normalized_slack.is_finite() {
                summary.min_slack = Some(v.normalized_slack);
                summary.argmin_seed = Some(seed);
            }
            if v.pass {
                summary.pass = 1;
                summary.boundary = u64::from(v.status == Status::Boundary);
                Outcome { summary, record: None }
            } else {
                summary.fail = 1;
                Outcome { summary, record: Some(record(Some(v), None)) }
            }
        }
    }
}

/// Runs every selected case for `config.trials` trials. The report depends
/// only on the config, not on thread count or scheduling.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport> {
    config.validate()?;
    let cfg = CheckConfig { tol: config.tol, eps: config.eps };
    let cases = config.selected_cases();
    let jobs: Vec<(usize, u64)> =
        (0..cases.len()).flat_map(|c| (0..config.trials).map(move |i| (c, i))).collect();
    let outcomes: Vec<Outcome> = jobs.par_iter().map(|&(c, i)| run_trial(config, &cfg, cases[c], i)).collect();

    let mut reports: Vec<CaseReport> = cases.iter().map(|id| CaseReport::empty(id)).collect();
    let mut failures = Vec::new();
    let mut errors = Vec::new();
    for (&(c, _), outcome) in jobs.iter().zip(outcomes) {
        reports[c] = std::mem::replace(&mut reports[c], CaseReport::empty("")).merge(&outcome.summary);
        if let Some(rec) = outcome.record {
            if rec.error.is_some() {
                errors.push(rec);
            } else {
                failures.push(rec);
            }
        }
    }
    Ok(SweepReport { config: config.clone(), environment: Environment::current(), cases: reports, failures, errors })
}
