//! Shortest common superstrings over DNA with free reverse complements.
//!
//! A superstring here must contain each input read *or its reverse
//! complement* as a substring — the strand of each read is unknown, as in
//! fragment assembly. This crate provides:
//!
//! * [`strings`]: the DNA alphabet, reverse complements, suffix–prefix
//!   overlaps via failure functions, and overlap-aware merging;
//! * [`instance`]: reads, strand orientation, and substring-free
//!   preprocessing;
//! * [`periodicity`]: primitive factors, string equivalence (cyclic-shift
//!   factors), rotations, and overlaps with periodic strings;
//! * [`cycle_cover`]: cycle weights over the overlap graph and a brute-force
//!   optimal cycle cover for small instances;
//! * [`greedy`]: the cycle-closing greedy (whose closed cycles form a
//!   minimum-weight cycle cover), the single-superstring greedy, and their
//!   two-stage composition;
//! * [`exact`]: branch-and-bound exact optima, the audits' oracle;
//! * [`analysis`]: per-cycle witness extraction and exact integer audits of
//!   the approximation-bound inequalities;
//! * [`harness`]: seeded random instance generation and evaluation
//!   campaigns.
//!
//! All algorithms are deterministic: equal inputs give equal outputs,
//! byte for byte, including every tie-break.

pub mod analysis;
pub mod cycle_cover;
pub mod error;
pub mod exact;
pub mod greedy;
pub mod harness;
pub mod instance;
pub mod periodicity;
pub mod strings;

pub use analysis::{BoundAudit, CycleExtract};
pub use cycle_cover::{Cycle, CycleCover};
pub use error::{Error, Result};
pub use exact::ExactSolution;
pub use greedy::{GreedyRun, MergeStep, MergeTrace, MgreedyResult};
pub use harness::{Algorithm, EvalInstance, EvalRow, EvaluationReport, GenConfig};
pub use instance::{Instance, Orientation, OrientedString, Read};
pub use strings::Dna;
