//! Executable audits of the approximation-bound pipeline.
//!
//! For each cycle of the greedy cover this module extracts a witness string
//! `x_c` (see [`CycleExtract`]) whose totals bound the cycle-closing greedy
//! answer, then measures every inequality the bounds rest on — as exact
//! integer slacks — on a concrete instance:
//!
//! * the retired set is no longer than the witness set (`‖T‖ ≤ ‖A‖`),
//! * optimal superstrings of `T` and `A` exceed the instance optimum by at
//!   most the cover weight (and `OPT(T) ≤ 2·OPT(S)`),
//! * the witness set's wasted overlap is at most `1.75×` the cover weight,
//! * the end-to-end bounds: `‖T‖ ≤ 3.75·OPT(S)` and the two-stage greedy
//!   answer is at most `2.875·OPT(S)`, via the half-compression identity
//!   `2·ALG(T) ≤ ‖T‖ + OPT(T)`.
//!
//! Fractional factors are cleared to integers (`1.75 = 7/4`, `3.75 = 15/4`,
//! `2.875 = 23/8`), so every slack is exact.

use std::collections::HashSet;

use serde::Serialize;

use crate::cycle_cover::Cycle;
use crate::error::{Error, Result};
use crate::exact::{exact_opt, exact_opt_strings};
use crate::greedy::{greedy_rc, mgreedy_rc};
use crate::instance::Instance;
use crate::periodicity::equivalent;
use crate::strings::{chain, overlap, total_length, Dna};

/// Largest instance (read count) the full audit accepts by default.
pub const DEFAULT_AUDIT_READ_CAP: usize = 8;

/// Largest cover (cycle count) the full audit accepts by default.
pub const DEFAULT_AUDIT_CYCLE_CAP: usize = 5;

/// A per-cycle witness. With the cycle's reads written `s_1, …, s_r` (in
/// cycle order) and `1 ≤ j ≤ r`:
///
/// * `rotation_index` is `j`;
/// * the *opened chain* is the merge of `s_{j+1}, …, s_r, s_1, …, s_j`
///   (one full turn ending at `s_j`), and is a suffix of `x_c`;
/// * `y_c` is the merge of `s_j, …, s_r, s_1, …, s_j` (a full turn with the
///   starting read repeated), and contains `x_c`;
/// * `x_c` is equivalent to the opened chain (their primitive factors are
///   cyclic shifts);
/// * across cycles, every selected pair satisfies
///   `2·ov(x_D, x_C) ≤ 2·w(D) + w(C)`.
///
/// Because the greedy closes each cycle on its minimum-overlap edge, the
/// opened chain — any rotation of it — is at least as long as the retired
/// string, so `|x_c|` bounds that cycle's contribution to `‖T‖`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleExtract {
    pub cycle: Cycle,
    pub rotation_index: usize,
    pub x_c: Dna,
    pub y_c: Dna,
}

/// Exact integer ledger of one instance's bound audit. All `slack_*` fields
/// are `left-hand bound − measured value` (scaled where the factor is
/// fractional) and are expected to be nonnegative; they are kept signed so a
/// violation would be visible rather than a crash.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundAudit {
    /// Total length of the retired set `T` (= the cycle-closing greedy's
    /// superstring length).
    pub norm_t: usize,
    /// Total length of the witness set `A = {x_c}`.
    pub norm_a: usize,
    pub opt_s: usize,
    pub opt_t: usize,
    pub opt_a: usize,
    pub cover_weight: usize,
    /// Total overlap of the optimal order over `A`: `‖A‖ − OPT(A)`. The
    /// reverse-complemented reversal of that order realizes the same total.
    pub ov_a: usize,
    /// Length of the two-stage greedy answer (greedy merge of `T`).
    pub tgreedy_len: usize,
    /// `(opt_s + cover_weight) − opt_t` ≥ 0.
    pub slack_opt_t_additive: i64,
    /// `2·opt_s − opt_t` ≥ 0.
    pub slack_opt_t_double: i64,
    /// `norm_a − norm_t` ≥ 0.
    pub slack_norm_t_vs_norm_a: i64,
    /// `(opt_s + cover_weight) − opt_a` ≥ 0.
    pub slack_opt_a_additive: i64,
    /// `7·cover_weight − 4·ov_a` ≥ 0 (the `1.75×` bound, in quarter-letters).
    pub slack_ov_a_quarters: i64,
    /// `15·opt_s − 4·norm_t` ≥ 0 (the `3.75×` bound, in quarter-letters).
    pub slack_norm_t_quarters: i64,
    /// `23·opt_s − 8·tgreedy_len` ≥ 0 (the `2.875×` bound, in eighth-letters).
    pub slack_tgreedy_eighths: i64,
    /// `(norm_t + opt_t) − 2·tgreedy_len` ≥ 0 (half-compression identity,
    /// in half-letters).
    pub slack_framework_halves: i64,
}

/// Audit slack column names in report order (shared with report writers).
pub const SLACK_COLUMN_NAMES: [&str; 8] = [
    "slack_opt_t_additive",
    "slack_opt_t_double",
    "slack_norm_t_vs_norm_a",
    "slack_opt_a_additive",
    "slack_ov_a_quarters",
    "slack_norm_t_quarters",
    "slack_tgreedy_eighths",
    "slack_framework_halves",
];

impl BoundAudit {
    /// All slack fields in [`SLACK_COLUMN_NAMES`] order, paired with their
    /// names.
    pub fn slack_fields(&self) -> [(&'static str, i64); 8] {
        let values = [
            self.slack_opt_t_additive,
            self.slack_opt_t_double,
            self.slack_norm_t_vs_norm_a,
            self.slack_opt_a_additive,
            self.slack_ov_a_quarters,
            self.slack_norm_t_quarters,
            self.slack_tgreedy_eighths,
            self.slack_framework_halves,
        ];
        let mut out = [("", 0i64); 8];
        for (slot, (name, value)) in out.iter_mut().zip(SLACK_COLUMN_NAMES.iter().zip(values)) {
            *slot = (name, value);
        }
        out
    }
}

/// One admissible witness for one rotation of one cycle.
struct Candidate {
    rotation_index: usize,
    x: Dna,
    y: Dna,
}

/// The opened chain and extended chain for the rotation starting the cycle
/// at 0-based position `start` (`rotation_index = start + 1`).
fn rotation_strings(cycle: &Cycle, start: usize) -> (Dna, Dna) {
    let vs = cycle.vertices();
    let r = vs.len();
    let opened: Vec<Dna> = (1..=r).map(|k| vs[(start + k) % r].seq.clone()).collect();
    let extended: Vec<Dna> = (0..=r).map(|k| vs[(start + k) % r].seq.clone()).collect();
    (chain(&opened), chain(&extended))
}

/// Every string that (1) has the opened chain as a suffix, (2) occurs in the
/// extended chain `y`, and (3) is equivalent to the opened chain — for every
/// rotation, deduplicated, in deterministic order (rotation, occurrence end,
/// length). The opened chain itself is always among them, so the list is
/// never empty.
fn cycle_candidates(cycle: &Cycle) -> Vec<Candidate> {
    let mut out = Vec::new();
    let mut seen: HashSet<Dna> = HashSet::new();
    for start in 0..cycle.len() {
        let (opened, y) = rotation_strings(cycle, start);
        let yb = y.as_bytes();
        let ob = opened.as_bytes();
        let ends: Vec<usize> = (ob.len()..=yb.len())
            .filter(|&e| &yb[e - ob.len()..e] == ob)
            .collect();
        for e in ends {
            for len in ob.len()..=e {
                let x = y.substring(e - len, e);
                if !seen.contains(&x) && equivalent(&x, &opened) {
                    seen.insert(x.clone());
                    out.push(Candidate {
                        rotation_index: start + 1,
                        x,
                        y: y.clone(),
                    });
                }
            }
        }
    }
    out
}

/// `2·ov(x_d, x_c) ≤ 2·w(d) + w(c)`, in both directions for a pair.
fn mutual_bound_holds(a: &(usize, &Candidate), b: &(usize, &Candidate)) -> bool {
    let (wa, ca) = a;
    let (wb, cb) = b;
    2 * overlap(&ca.x, &cb.x) <= 2 * wa + wb && 2 * overlap(&cb.x, &ca.x) <= 2 * wb + wa
}

fn select_joint(
    weights: &[usize],
    families: &[Vec<Candidate>],
    chosen: &mut Vec<usize>,
) -> bool {
    let k = chosen.len();
    if k == families.len() {
        return true;
    }
    for (idx, candidate) in families[k].iter().enumerate() {
        let ok = chosen.iter().enumerate().all(|(prev, &pick)| {
            mutual_bound_holds(
                &(weights[prev], &families[prev][pick]),
                &(weights[k], candidate),
            )
        });
        if ok {
            chosen.push(idx);
            if select_joint(weights, families, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Witness extraction for every cycle of a cover at once: picks one
/// candidate per cycle such that all pairwise overlap bounds hold (first
/// admissible selection in deterministic candidate order).
pub fn extract_all(cycles: &[Cycle]) -> Result<Vec<CycleExtract>> {
    let families: Vec<Vec<Candidate>> = cycles.iter().map(cycle_candidates).collect();
    let weights: Vec<usize> = cycles.iter().map(Cycle::weight).collect();
    let mut chosen = Vec::new();
    if !select_joint(&weights, &families, &mut chosen) {
        return Err(Error::InternalInconsistency(
            "no jointly admissible cycle witnesses found".to_string(),
        ));
    }
    Ok(cycles
        .iter()
        .zip(families.iter().zip(&chosen))
        .map(|(cycle, (family, &pick))| {
            let c = &family[pick];
            CycleExtract {
                cycle: cycle.clone(),
                rotation_index: c.rotation_index,
                x_c: c.x.clone(),
                y_c: c.y.clone(),
            }
        })
        .collect())
}

/// Witness extraction for one cycle against its peers (the other cycles of
/// the same cover): returns this cycle's part of a jointly admissible
/// selection.
pub fn extract_xc_yc(cycle: &Cycle, peers: &[Cycle]) -> Result<CycleExtract> {
    let mut all = Vec::with_capacity(peers.len() + 1);
    all.push(cycle.clone());
    all.extend_from_slice(peers);
    Ok(extract_all(&all)?.swap_remove(0))
}

/// Runs the full audit with the default size caps; see
/// [`audit_instance_with_caps`].
pub fn audit_instance(instance: &Instance) -> Result<BoundAudit> {
    audit_instance_with_caps(instance, DEFAULT_AUDIT_READ_CAP, DEFAULT_AUDIT_CYCLE_CAP)
}

/// Measures every audited inequality on one (preprocessed) instance: runs
/// the cycle-closing greedy, extracts witnesses, solves the instance, the
/// retired set, and the witness set exactly, and fills the slack ledger.
/// Exact solves are exponential, hence the caps on reads and cycles.
pub fn audit_instance_with_caps(
    instance: &Instance,
    read_cap: usize,
    cycle_cap: usize,
) -> Result<BoundAudit> {
    if instance.len() > read_cap {
        return Err(Error::TooLarge {
            what: "audit reads",
            size: instance.len(),
            limit: read_cap,
        });
    }
    let mg = mgreedy_rc(instance);
    let cycles = &mg.trace.cover.cycles;
    if cycles.len() > cycle_cap {
        return Err(Error::TooLarge {
            what: "audit cycles",
            size: cycles.len(),
            limit: cycle_cap,
        });
    }
    let cover_weight = mg.trace.cover.total_weight;
    let norm_t = total_length(&mg.t);
    let opt_s = exact_opt(instance)?.length;
    let opt_t = exact_opt_strings(&mg.t)?.length;

    let extracts = extract_all(cycles)?;
    let a: Vec<Dna> = extracts.iter().map(|e| e.x_c.clone()).collect();
    let norm_a = total_length(&a);
    let sol_a = exact_opt_strings(&a)?;
    let opt_a = sol_a.length;
    let ov_a: usize = sol_a
        .order
        .windows(2)
        .map(|pair| overlap(&pair[0].seq, &pair[1].seq))
        .sum();
    debug_assert_eq!(norm_a, opt_a + ov_a, "total overlap identity");

    let tgreedy_len = greedy_rc(&mg.t).len();

    let i = |v: usize| -> i64 { v as i64 };
    Ok(BoundAudit {
        norm_t,
        norm_a,
        opt_s,
        opt_t,
        opt_a,
        cover_weight,
        ov_a,
        tgreedy_len,
        slack_opt_t_additive: i(opt_s) + i(cover_weight) - i(opt_t),
        slack_opt_t_double: 2 * i(opt_s) - i(opt_t),
        slack_norm_t_vs_norm_a: i(norm_a) - i(norm_t),
        slack_opt_a_additive: i(opt_s) + i(cover_weight) - i(opt_a),
        slack_ov_a_quarters: 7 * i(cover_weight) - 4 * i(ov_a),
        slack_norm_t_quarters: 15 * i(opt_s) - 4 * i(norm_t),
        slack_tgreedy_eighths: 23 * i(opt_s) - 8 * i(tgreedy_len),
        slack_framework_halves: i(norm_t) + i(opt_t) - 2 * i(tgreedy_len),
    })
}
