//! Exact string primitives over the DNA alphabet.
//!
//! Everything downstream (greedy merging, cycle covers, the exact solver)
//! reduces to four operations defined here: reverse complement, maximum
//! proper suffix-prefix overlap, the prefix part `pref(x, y)` left over when
//! `y` is glued onto `x`, and the chain `⟨x_1, …, x_r⟩` that concatenates
//! prefix parts and ends with the last string. Overlaps are *proper*: the
//! matched part is strictly shorter than both strings, so `dist(x, y) =
//! |x| - overlap(x, y)` is always at least 1.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Complement of a single base: `a ↔ t`, `g ↔ c`.
#[inline]
pub(crate) fn complement(base: u8) -> u8 {
    match base {
        b'a' => b't',
        b't' => b'a',
        b'g' => b'c',
        b'c' => b'g',
        _ => unreachable!("Dna holds only bases in {{a,t,g,c}}"),
    }
}

/// An immutable DNA string over `{a, t, g, c}`.
///
/// Construction validates the alphabet (uppercase input is lowercased);
/// every operation in this module may therefore assume clean bytes. The
/// derived `Ord` is plain lexicographic byte order, which the greedy
/// algorithms use for deterministic tie-breaking.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Dna(Vec<u8>);

impl Dna {
    /// Parses a string, lowercasing letters and rejecting anything outside
    /// the alphabet.
    pub fn parse(s: &str) -> Result<Self> {
        let mut bytes = Vec::with_capacity(s.len());
        for (position, ch) in s.chars().enumerate() {
            let lower = ch.to_ascii_lowercase();
            match lower {
                'a' | 't' | 'g' | 'c' => bytes.push(lower as u8),
                _ => return Err(Error::InvalidBase { byte: ch, position }),
            }
        }
        Ok(Dna(bytes))
    }

    /// Wraps bytes that are already known to be valid lowercase bases.
    pub(crate) fn from_raw(bytes: Vec<u8>) -> Self {
        debug_assert!(bytes.iter().all(|b| matches!(b, b'a' | b't' | b'g' | b'c')));
        Dna(bytes)
    }

    /// The empty string (identity for concatenation; valid superstring of an
    /// empty instance).
    pub fn empty() -> Self {
        Dna(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Reverse complement: complement every base, then reverse.
    pub fn reverse_complement(&self) -> Dna {
        Dna(self.0.iter().rev().map(|&b| complement(b)).collect())
    }

    /// Whether the string equals its own reverse complement.
    pub fn is_rc_palindrome(&self) -> bool {
        let n = self.0.len();
        (0..n).all(|i| self.0[i] == complement(self.0[n - 1 - i]))
    }

    /// Whether `needle` occurs in `self` as a contiguous substring.
    /// The empty string occurs in everything.
    pub fn contains(&self, needle: &Dna) -> bool {
        contains_sub(&self.0, &needle.0)
    }

    /// Substring copy over a byte range.
    pub fn substring(&self, start: usize, end: usize) -> Dna {
        Dna(self.0[start..end].to_vec())
    }

    /// Concatenation.
    pub fn concat(&self, other: &Dna) -> Dna {
        let mut bytes = Vec::with_capacity(self.0.len() + other.0.len());
        bytes.extend_from_slice(&self.0);
        bytes.extend_from_slice(&other.0);
        Dna(bytes)
    }
}

pub(crate) fn contains_sub(haystack: &[u8], needle: &[u8]) -> bool {
    if needle.is_empty() {
        return true;
    }
    if needle.len() > haystack.len() {
        return false;
    }
    haystack.windows(needle.len()).any(|w| w == needle)
}

impl fmt::Display for Dna {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Bytes are validated ASCII.
        f.write_str(std::str::from_utf8(&self.0).expect("ascii"))
    }
}

impl fmt::Debug for Dna {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dna({})", self)
    }
}

impl FromStr for Dna {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Dna::parse(s)
    }
}

impl Serialize for Dna {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Failure function (border array) of `s`: `out[i]` is the length of the
/// longest proper border of `s[..=i]`.
pub(crate) fn failure_function(s: &[u8]) -> Vec<usize> {
    let mut out = vec![0usize; s.len()];
    let mut k = 0usize;
    for i in 1..s.len() {
        while k > 0 && s[i] != s[k] {
            k = out[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        out[i] = k;
    }
    out
}

/// Length of the longest proper border of `s` (longest string that is both a
/// proper prefix and a proper suffix). Empty and single-base strings have
/// border 0.
pub(crate) fn longest_border(s: &[u8]) -> usize {
    if s.is_empty() {
        0
    } else {
        *failure_function(s).last().unwrap()
    }
}

/// Maximum proper overlap `ov(x, y)`: the length of the longest string `v`
/// with `x = uv`, `y = vw` and `u, w` nonempty. Both leftover parts must be
/// nonempty, so the result is strictly below `min(|x|, |y|)`; in particular
/// `overlap(x, x)` is the longest proper border of `x`.
///
/// Computed with one failure-function pass over `y · '#' · x` (the separator
/// is outside the alphabet, so matches cannot cross it), then stepping down
/// the border chain until the match is proper on both sides.
pub fn overlap(x: &Dna, y: &Dna) -> usize {
    let (xb, yb) = (x.as_bytes(), y.as_bytes());
    if xb.is_empty() || yb.is_empty() {
        return 0;
    }
    let mut combined = Vec::with_capacity(xb.len() + yb.len() + 1);
    combined.extend_from_slice(yb);
    combined.push(b'#');
    combined.extend_from_slice(xb);
    let fail = failure_function(&combined);
    let mut v = *fail.last().unwrap();
    // v is the longest suffix of x that is a prefix of y; shrink along y's
    // border chain until it is proper with respect to both strings.
    while v > 0 && (v >= xb.len() || v >= yb.len()) {
        v = fail[v - 1];
    }
    v
}

/// The prefix part `pref(x, y)`: the first `dist(x, y)` bases of `x`, i.e.
/// what remains of `x` once `y` is glued on behind it at maximum overlap.
pub fn prefix_part(x: &Dna, y: &Dna) -> Dna {
    x.substring(0, dist(x, y))
}

/// Overlap distance `dist(x, y) = |x| - overlap(x, y)`. At least 1 for
/// nonempty `x` because overlaps are proper.
pub fn dist(x: &Dna, y: &Dna) -> usize {
    x.len() - overlap(x, y)
}

/// Merges two strings at their maximum overlap: `⟨x, y⟩ = pref(x, y) · y`.
pub fn merge2(x: &Dna, y: &Dna) -> Dna {
    let mut bytes = Vec::with_capacity(dist(x, y) + y.len());
    bytes.extend_from_slice(&x.as_bytes()[..dist(x, y)]);
    bytes.extend_from_slice(y.as_bytes());
    Dna::from_raw(bytes)
}

/// The chain `⟨x_1, …, x_r⟩ = pref(x_1, x_2) ⋯ pref(x_{r-1}, x_r) · x_r`:
/// every consecutive pair is glued at its own maximum overlap. For an empty
/// list the chain is the empty string.
pub fn chain(xs: &[Dna]) -> Dna {
    let Some(last) = xs.last() else {
        return Dna::empty();
    };
    let mut bytes = Vec::new();
    for pair in xs.windows(2) {
        bytes.extend_from_slice(&pair[0].as_bytes()[..dist(&pair[0], &pair[1])]);
    }
    bytes.extend_from_slice(last.as_bytes());
    Dna::from_raw(bytes)
}

/// Total length `‖S‖` of a collection of strings.
pub fn total_length<'a, I: IntoIterator<Item = &'a Dna>>(xs: I) -> usize {
    xs.into_iter().map(Dna::len).sum()
}
