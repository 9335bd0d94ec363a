//! Exact optimal superstrings by branch-and-bound over orders and strands.
//!
//! Every superstring of a substring-free set is at least as long as the
//! chain of its reads in leftmost-occurrence order, with each read in the
//! strand it occurs in; conversely every chain is a superstring. The
//! optimum is therefore the minimum chain length over all orderings and
//! strand choices, which this module searches directly with depth-first
//! branch-and-bound.
//!
//! On inputs that are not substring-free the search still minimizes chain
//! length over orderings (useful as a well-defined yardstick for arbitrary
//! string lists), but containments can make a shorter superstring exist.
//!
//! Ties between equally short solutions resolve to the lexicographically
//! smallest superstring, which the bound preserves by pruning only branches
//! that are strictly worse than the incumbent.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::instance::{Instance, Orientation, OrientedString};
use crate::strings::{overlap, Dna};

/// Largest number of strings the solver accepts by default.
pub const DEFAULT_EXACT_CAP: usize = 10;

/// Default node budget for the branch-and-bound search.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// A proven-optimal superstring: the lexicographically smallest one of
/// minimum length, together with the oriented order whose chain it is.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactSolution {
    pub superstring: Dna,
    pub order: Vec<OrientedString>,
    pub length: usize,
    pub nodes_explored: u64,
}

/// Minimum superstring over the instance's reads, each taken in either
/// strand. Default size cap and node budget; see [`exact_opt_with_limits`].
pub fn exact_opt(instance: &Instance) -> Result<ExactSolution> {
    exact_opt_with_limits(instance, DEFAULT_EXACT_CAP, DEFAULT_NODE_BUDGET)
}

/// [`exact_opt`] with explicit limits. Returns [`Error::TooLarge`] when the
/// instance has more than `cap` reads and [`Error::Incomplete`] when the
/// node budget runs out before the search space is exhausted.
pub fn exact_opt_with_limits(
    instance: &Instance,
    cap: usize,
    budget: u64,
) -> Result<ExactSolution> {
    let labeled: Vec<(String, Dna)> = instance
        .reads()
        .iter()
        .map(|r| (r.id.clone(), r.seq.clone()))
        .collect();
    solve(&labeled, "exact solver reads", cap, budget)
}

/// Minimum chain length over orderings and strands of a raw string list
/// (duplicates and containments permitted; see the module notes). Order
/// entries are labeled `s0, s1, …` by input position.
pub fn exact_opt_strings(strings: &[Dna]) -> Result<ExactSolution> {
    exact_opt_strings_with_limits(strings, DEFAULT_EXACT_CAP, DEFAULT_NODE_BUDGET)
}

/// [`exact_opt_strings`] with explicit limits.
pub fn exact_opt_strings_with_limits(
    strings: &[Dna],
    cap: usize,
    budget: u64,
) -> Result<ExactSolution> {
    let labeled: Vec<(String, Dna)> = strings
        .iter()
        .enumerate()
        .map(|(i, s)| (format!("s{i}"), s.clone()))
        .collect();
    solve(&labeled, "exact solver strings", cap, budget)
}

/// Length of the optimal superstring.
pub fn opt_length(instance: &Instance) -> Result<usize> {
    exact_opt(instance).map(|s| s.length)
}

struct Search<'a> {
    labeled: &'a [(String, Dna)],
    /// `variants[i][o]`: strand `o` of string `i` (palindromic strings pin
    /// both slots to the forward strand and skip `o = 1` during search).
    variants: Vec<[Dna; 2]>,
    palindrome: Vec<bool>,
    /// `ov[2i + oi][2j + oj]`: overlap from variant `(i, oi)` into `(j, oj)`.
    ov: Vec<Vec<usize>>,
    /// Per string, `len - `the largest overlap any variant of it can receive
    /// from a variant of a different string: a lower bound on what placing it
    /// adds to the chain.
    min_add: Vec<usize>,
    budget: u64,
    nodes: u64,
    exhausted: bool,
    placed: Vec<bool>,
    order: Vec<(usize, usize)>,
    chain: Vec<u8>,
    /// Sum of `min_add` over unplaced strings.
    remaining: usize,
    best: Option<(usize, Vec<u8>, Vec<(usize, usize)>)>,
}

impl Search<'_> {
    fn leaf(&mut self) {
        let candidate = (self.chain.len(), &self.chain);
        let improves = match &self.best {
            None => true,
            Some((len, bytes, _)) => candidate < (*len, bytes),
        };
        if improves {
            self.best = Some((self.chain.len(), self.chain.clone(), self.order.clone()));
        }
    }

    fn dfs(&mut self) {
        if self.order.len() == self.labeled.len() {
            self.leaf();
            return;
        }
        for i in 0..self.labeled.len() {
            if self.placed[i] {
                continue;
            }
            for o in 0..=1 {
                if o == 1 && self.palindrome[i] {
                    continue;
                }
                if self.exhausted {
                    return;
                }
                self.nodes += 1;
                if self.nodes > self.budget {
                    self.exhausted = true;
                    return;
                }
                let added = match self.order.last() {
                    None => self.variants[i][o].len(),
                    Some(&(j, oj)) => {
                        self.variants[i][o].len() - self.ov[2 * j + oj][2 * i + o]
                    }
                };
                let lower_bound = self.chain.len() + added + (self.remaining - self.min_add[i]);
                if let Some((best_len, _, _)) = &self.best {
                    // Strictly-worse pruning only: an equal-length branch may
                    // still end in a lexicographically smaller superstring.
                    if lower_bound > *best_len {
                        continue;
                    }
                }
                let seq = self.variants[i][o].as_bytes();
                self.chain.extend_from_slice(&seq[seq.len() - added..]);
                self.placed[i] = true;
                self.remaining -= self.min_add[i];
                self.order.push((i, o));

                self.dfs();

                self.order.pop();
                self.remaining += self.min_add[i];
                self.placed[i] = false;
                self.chain.truncate(self.chain.len() - added);
            }
        }
    }
}

fn solve(
    labeled: &[(String, Dna)],
    what: &'static str,
    cap: usize,
    budget: u64,
) -> Result<ExactSolution> {
    let m = labeled.len();
    if m > cap {
        return Err(Error::TooLarge {
            what,
            size: m,
            limit: cap,
        });
    }
    if m == 0 {
        return Ok(ExactSolution {
            superstring: Dna::empty(),
            order: Vec::new(),
            length: 0,
            nodes_explored: 0,
        });
    }

    let variants: Vec<[Dna; 2]> = labeled
        .iter()
        .map(|(_, s)| [s.clone(), s.reverse_complement()])
        .collect();
    let palindrome: Vec<bool> = variants.iter().map(|v| v[0] == v[1]).collect();
    let mut ov = vec![vec![0usize; 2 * m]; 2 * m];
    for i in 0..m {
        for oi in 0..=1 {
            for j in 0..m {
                for oj in 0..=1 {
                    ov[2 * i + oi][2 * j + oj] = overlap(&variants[i][oi], &variants[j][oj]);
                }
            }
        }
    }
    let mut min_add = vec![0usize; m];
    for i in 0..m {
        let len = variants[i][0].len();
        let mut max_in = 0;
        for j in (0..m).filter(|&j| j != i) {
            for oj in 0..=1 {
                for oi in 0..=1 {
                    max_in = max_in.max(ov[2 * j + oj][2 * i + oi]);
                }
            }
        }
        min_add[i] = len - max_in.min(len);
    }
    let remaining = min_add.iter().sum();

    let mut search = Search {
        labeled,
        variants,
        palindrome,
        ov,
        min_add,
        budget,
        nodes: 0,
        exhausted: false,
        placed: vec![false; m],
        order: Vec::new(),
        chain: Vec::new(),
        remaining,
        best: None,
    };
    search.dfs();

    if search.exhausted {
        let best_length = search.best.as_ref().map_or_else(
            // Budget too small to finish even one ordering: report the
            // trivial concatenation bound.
            || labeled.iter().map(|(_, s)| s.len()).sum(),
            |(len, _, _)| *len,
        );
        return Err(Error::Incomplete {
            budget,
            best_length,
        });
    }

    let (length, bytes, order) = search.best.expect("nonempty search space");
    let order: Vec<OrientedString> = order
        .iter()
        .map(|&(i, o)| {
            let orientation = if o == 0 {
                Orientation::Forward
            } else {
                Orientation::ReverseComplement
            };
            OrientedString {
                read_id: labeled[i].0.clone(),
                orientation,
                seq: search.variants[i][o].clone(),
            }
        })
        .collect();
    Ok(ExactSolution {
        superstring: Dna::from_raw(bytes),
        order,
        length,
        nodes_explored: search.nodes,
    })
}
