//! Random instance generation and evaluation campaigns.
//!
//! Generation models unknown-strand sequencing: a uniform random genome is
//! drawn, reads are sampled at uniform start positions, and each read is
//! independently reverse-complemented with a configured probability.
//! Everything is driven by a seedable PRNG (ChaCha8, identity recorded in
//! reports as [`PRNG_IDENTITY`]) so instances are reproducible from their
//! seed alone. Draw order is part of the contract: first every genome base
//! (`0..4` mapping alphabetically to `a, c, g, t`), then per read — in read
//! order — a start position followed by an orientation flip.
//!
//! Evaluation runs the requested algorithms per instance and, when asked,
//! the exact solver and the full bound audit, collecting integer lengths
//! only; ratio formatting is the report writer's concern. Oracle failures
//! (size caps, node budgets) are recorded as warnings on the report, never
//! fatal to the campaign.

use std::fmt;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::analysis::{audit_instance, BoundAudit};
use crate::error::{Error, Result};
use crate::exact::exact_opt;
use crate::greedy::{greedy_rc, mgreedy_rc, MergeTrace};
use crate::instance::{preprocess_substring_free, Instance, Read};
use crate::strings::Dna;

/// Name of the PRNG backing generation, recorded in report headers.
pub const PRNG_IDENTITY: &str = "chacha8";

/// Parameters for one random instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GenConfig {
    pub genome_length: usize,
    pub read_count: usize,
    pub read_length: usize,
    /// Probability that a read is flipped to its reverse complement.
    pub rc_probability: f64,
    pub seed: u64,
}

impl GenConfig {
    pub fn validate(&self) -> Result<()> {
        if self.read_length == 0 {
            return Err(Error::InvalidConfig {
                reason: "read_length must be at least 1".to_string(),
            });
        }
        if self.read_length > self.genome_length {
            return Err(Error::InvalidConfig {
                reason: format!(
                    "read_length {} exceeds genome_length {}",
                    self.read_length, self.genome_length
                ),
            });
        }
        if !(0.0..=1.0).contains(&self.rc_probability) {
            return Err(Error::InvalidConfig {
                reason: format!("rc_probability {} outside [0, 1]", self.rc_probability),
            });
        }
        Ok(())
    }
}

/// Draws the raw (unpreprocessed) reads for a config; ids are `r0, r1, …`
/// in draw order.
pub fn generate_raw_reads(config: &GenConfig) -> Result<Vec<Read>> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    const BASES: [u8; 4] = [b'a', b'c', b'g', b't'];
    let genome: Vec<u8> = (0..config.genome_length)
        .map(|_| BASES[rng.random_range(0..4usize)])
        .collect();
    let mut reads = Vec::with_capacity(config.read_count);
    for i in 0..config.read_count {
        let start = rng.random_range(0..=config.genome_length - config.read_length);
        let flip = rng.random_bool(config.rc_probability);
        let window = Dna::from_raw(genome[start..start + config.read_length].to_vec());
        let seq = if flip {
            window.reverse_complement()
        } else {
            window
        };
        reads.push(Read::new(format!("r{i}"), seq)?);
    }
    Ok(reads)
}

/// Draws reads and preprocesses them into a substring-free instance.
pub fn generate_instance(config: &GenConfig) -> Result<Instance> {
    preprocess_substring_free(generate_raw_reads(config)?)
}

/// The algorithms an evaluation can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Mgreedy,
    Greedy,
    Tgreedy,
}

pub const ALL_ALGORITHMS: [Algorithm; 3] = [Algorithm::Mgreedy, Algorithm::Greedy, Algorithm::Tgreedy];

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::Mgreedy => "mgreedy",
            Algorithm::Greedy => "greedy",
            Algorithm::Tgreedy => "tgreedy",
        })
    }
}

impl std::str::FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Algorithm> {
        match s {
            "mgreedy" => Ok(Algorithm::Mgreedy),
            "greedy" => Ok(Algorithm::Greedy),
            "tgreedy" => Ok(Algorithm::Tgreedy),
            other => Err(Error::InvalidConfig {
                reason: format!("unknown algorithm {other:?} (expected mgreedy, greedy, or tgreedy)"),
            }),
        }
    }
}

/// One instance queued for evaluation, with its provenance: `m_raw` is the
/// read count before preprocessing, `seed` the generation seed when the
/// instance was generated rather than loaded.
#[derive(Debug, Clone)]
pub struct EvalInstance {
    pub id: String,
    pub seed: Option<u64>,
    pub m_raw: usize,
    pub instance: Instance,
}

impl EvalInstance {
    /// Generates the instance for `config` under the given id.
    pub fn generate(id: String, config: &GenConfig) -> Result<EvalInstance> {
        Ok(EvalInstance {
            id,
            seed: Some(config.seed),
            m_raw: config.read_count,
            instance: generate_instance(config)?,
        })
    }

    /// Wraps an externally loaded instance (no seed provenance).
    pub fn loaded(id: String, raw_read_count: usize, instance: Instance) -> EvalInstance {
        EvalInstance {
            id,
            seed: None,
            m_raw: raw_read_count,
            instance,
        }
    }
}

/// Integer measurements for one instance. Length fields are present exactly
/// when the corresponding algorithm was requested; `opt` when the exact
/// solve was requested and succeeded; `norm_a`/`ov_a`/`audit` when the audit
/// was requested and succeeded. `cover_weight`, `norm_t`, and `trace` come
/// with any run that includes the cycle-closing stage (mgreedy or tgreedy).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EvalRow {
    pub instance_id: String,
    pub seed: Option<u64>,
    pub m_raw: usize,
    pub m_preprocessed: usize,
    pub norm_s: usize,
    pub opt: Option<usize>,
    pub len_mgreedy: Option<usize>,
    pub len_greedy: Option<usize>,
    pub len_tgreedy: Option<usize>,
    pub cover_weight: Option<usize>,
    pub norm_t: Option<usize>,
    pub norm_a: Option<usize>,
    pub ov_a: Option<usize>,
    pub audit: Option<BoundAudit>,
    pub trace: Option<MergeTrace>,
    /// Measured wall time; report writers may suppress it for byte-stable
    /// output.
    pub wall_ms_total: u64,
}

/// A full campaign: the PRNG identity, one row per instance in input order,
/// and any per-row oracle warnings.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvaluationReport {
    pub prng: String,
    pub rows: Vec<EvalRow>,
    pub warnings: Vec<String>,
}

/// Runs the campaign: every requested algorithm on every instance, plus the
/// exact solve and the bound audit when flagged. Rows keep the input order;
/// oracle failures become warnings (`"<id>: <error>"`) with the affected
/// fields left empty.
pub fn evaluate(
    instances: &[EvalInstance],
    algorithms: &[Algorithm],
    with_exact: bool,
    with_audit: bool,
) -> EvaluationReport {
    let mut rows = Vec::with_capacity(instances.len());
    let mut warnings = Vec::new();
    let wants = |a: Algorithm| algorithms.contains(&a);
    let needs_cycle_stage = wants(Algorithm::Mgreedy) || wants(Algorithm::Tgreedy);

    for item in instances {
        let started = Instant::now();
        let inst = &item.instance;

        let mg = needs_cycle_stage.then(|| mgreedy_rc(inst));
        let len_mgreedy = mg
            .as_ref()
            .filter(|_| wants(Algorithm::Mgreedy))
            .map(|m| m.superstring.len());
        let len_tgreedy = mg
            .as_ref()
            .filter(|_| wants(Algorithm::Tgreedy))
            .map(|m| greedy_rc(&m.t).len());
        let len_greedy = wants(Algorithm::Greedy).then(|| {
            let seqs: Vec<Dna> = inst.reads().iter().map(|r| r.seq.clone()).collect();
            greedy_rc(&seqs).len()
        });

        let opt = if with_exact {
            match exact_opt(inst) {
                Ok(sol) => Some(sol.length),
                Err(e) => {
                    warnings.push(format!("{}: {e}", item.id));
                    None
                }
            }
        } else {
            None
        };

        let audit = if with_audit {
            match audit_instance(inst) {
                Ok(a) => Some(a),
                Err(e) => {
                    warnings.push(format!("{}: {e}", item.id));
                    None
                }
            }
        } else {
            None
        };

        rows.push(EvalRow {
            instance_id: item.id.clone(),
            seed: item.seed,
            m_raw: item.m_raw,
            m_preprocessed: inst.len(),
            norm_s: inst.total_length(),
            opt,
            len_mgreedy,
            len_greedy,
            len_tgreedy,
            cover_weight: mg.as_ref().map(|m| m.trace.cover.total_weight),
            norm_t: mg.as_ref().map(|m| m.superstring.len()),
            norm_a: audit.as_ref().map(|a| a.norm_a),
            ov_a: audit.as_ref().map(|a| a.ov_a),
            audit,
            trace: mg.map(|m| m.trace),
            wall_ms_total: started.elapsed().as_millis() as u64,
        });
    }

    EvaluationReport {
        prng: PRNG_IDENTITY.to_string(),
        rows,
        warnings,
    }
}
