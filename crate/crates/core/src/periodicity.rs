//! Periodicity structure of strings: shortest repeating factors, cyclic
//! equivalence, and overlaps against periodic extensions.
//!
//! Every nonempty string `s` decomposes as `s = x^i y` where `x` is the
//! shortest such prefix (`i ≥ 1`, `y` a proper prefix of `x`); `x` is the
//! *factor* of `s` and `|x|` its *period*, computed as `|s|` minus the
//! longest border of `s`. Two strings are *equivalent* when their factors
//! are cyclic shifts of one another. Semi-infinite strings are represented
//! by a generator string and the convention of infinite repetition.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::strings::{contains_sub, longest_border, Dna};

/// The shortest repeating factor of a string together with its length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorInfo {
    pub factor: Dna,
    pub period: usize,
}

/// Shortest factor of `s`: the prefix of length `|s| - longest_border(s)`.
pub fn factor_of(s: &Dna) -> FactorInfo {
    let period = s.len() - longest_border(s.as_bytes());
    FactorInfo {
        factor: s.substring(0, period),
        period,
    }
}

/// The period `|factor_of(s)|` of `s`.
pub fn period(s: &Dna) -> usize {
    s.len() - longest_border(s.as_bytes())
}

/// Whether `b` is a cyclic shift of `a` (equal lengths and `b` occurs in
/// `a·a`). Empty strings are cyclic shifts of each other only.
fn is_cyclic_shift(a: &Dna, b: &Dna) -> bool {
    a.len() == b.len() && contains_sub(a.concat(a).as_bytes(), b.as_bytes())
}

/// Whether `x` and `y` have cyclically equal factors of the same length.
/// This is an equivalence relation; equivalent strings embed into the same
/// periodic bi-infinite pattern.
pub fn equivalent(x: &Dna, y: &Dna) -> bool {
    is_cyclic_shift(&factor_of(x).factor, &factor_of(y).factor)
}

/// Shortest generator of the semi-infinite string `g^∞`: the prefix of `g`
/// whose exact powers rebuild `g`, or `g` itself when its period does not
/// divide its length.
pub fn primitive_root(g: &Dna) -> Dna {
    let p = period(g);
    if p > 0 && g.len() % p == 0 {
        g.substring(0, p)
    } else {
        g.clone()
    }
}

/// Whether the finite string `s` is equivalent to the semi-infinite string
/// `generator^∞` (whose factor is the primitive root of the generator).
pub fn equivalent_to_periodic(s: &Dna, generator: &Dna) -> bool {
    is_cyclic_shift(&primitive_root(generator), &factor_of(s).factor)
}

/// The rotation of `factor` starting at position `k` (1-indexed):
/// `factor[k..] · factor[..k-1]`. `k = 1` is the identity.
pub fn rotation(factor: &Dna, k: usize) -> Result<Dna> {
    if k == 0 || k > factor.len() {
        return Err(Error::RotationOutOfRange {
            index: k,
            len: factor.len(),
        });
    }
    Ok(factor
        .substring(k - 1, factor.len())
        .concat(&factor.substring(0, k - 1)))
}

/// Length of the longest suffix of `s` (strictly shorter than `s`) that is a
/// prefix of the semi-infinite string `factor^∞`.
pub fn overlap_with_periodic(s: &Dna, factor: &Dna) -> usize {
    let (sb, fb) = (s.as_bytes(), factor.as_bytes());
    if sb.is_empty() || fb.is_empty() {
        return 0;
    }
    'lens: for len in (1..sb.len()).rev() {
        let suffix = &sb[sb.len() - len..];
        for (i, &b) in suffix.iter().enumerate() {
            if b != fb[i % fb.len()] {
                continue 'lens;
            }
        }
        return len;
    }
    0
}

/// Smallest rotation index `k` of `factor` such that every candidate `s`
/// satisfies `overlap_with_periodic(s, rotation(factor, k)) ≤ period(s) +
/// |factor| / 2` (compared in doubled integers, so odd factor lengths need
/// no rounding). Such a rotation always exists when every candidate is
/// inequivalent to `factor^∞`; candidates are checked and rejected
/// otherwise. An empty candidate list vacuously yields `k = 1`.
pub fn find_critical_rotation(factor: &Dna, candidates: &[Dna]) -> Result<usize> {
    if factor.is_empty() {
        return Err(Error::InternalInconsistency(
            "critical rotation of an empty factor".into(),
        ));
    }
    for s in candidates {
        if equivalent_to_periodic(s, factor) {
            return Err(Error::EquivalentCandidate {
                candidate: s.to_string(),
                factor: factor.to_string(),
            });
        }
    }
    for k in 1..=factor.len() {
        let rotated = rotation(factor, k)?;
        let ok = candidates
            .iter()
            .all(|s| 2 * overlap_with_periodic(s, &rotated) <= 2 * period(s) + factor.len());
        if ok {
            return Ok(k);
        }
    }
    Err(Error::InternalInconsistency(format!(
        "no critical rotation of {factor:?} for {} candidates",
        candidates.len()
    )))
}
