//! Problem instances: named reads, oriented occurrences, and the
//! substring-free preprocessing step.
//!
//! A superstring must contain, for every read, the read itself *or* its
//! reverse complement. Reads that are contained in another read (in either
//! orientation) are therefore redundant and are removed up front; all
//! solvers assume that preprocessing has happened.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::strings::Dna;

/// Which strand of a read an algorithm placed in its output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Orientation {
    Forward,
    ReverseComplement,
}

impl Orientation {
    pub fn flip(self) -> Orientation {
        match self {
            Orientation::Forward => Orientation::ReverseComplement,
            Orientation::ReverseComplement => Orientation::Forward,
        }
    }
}

/// A named input read with a nonempty sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Read {
    pub id: String,
    pub seq: Dna,
}

impl Read {
    pub fn new(id: impl Into<String>, seq: Dna) -> Result<Read> {
        let id = id.into();
        if seq.is_empty() {
            return Err(Error::EmptyRead { id });
        }
        Ok(Read { id, seq })
    }
}

/// A read fixed to one strand, with its sequence materialized.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrientedString {
    pub read_id: String,
    pub orientation: Orientation,
    pub seq: Dna,
}

impl OrientedString {
    pub fn new(read: &Read, orientation: Orientation) -> OrientedString {
        let seq = match orientation {
            Orientation::Forward => read.seq.clone(),
            Orientation::ReverseComplement => read.seq.reverse_complement(),
        };
        OrientedString {
            read_id: read.id.clone(),
            orientation,
            seq,
        }
    }

    /// The same read on the opposite strand.
    pub fn flipped(&self) -> OrientedString {
        OrientedString {
            read_id: self.read_id.clone(),
            orientation: self.orientation.flip(),
            seq: self.seq.reverse_complement(),
        }
    }

    /// Key used for canonical orderings of covers and traces.
    pub(crate) fn sort_key(&self) -> (&str, Orientation) {
        (&self.read_id, self.orientation)
    }
}

/// A set of reads with distinct ids, in input order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Instance {
    reads: Vec<Read>,
}

impl Instance {
    /// Builds an instance, checking id uniqueness. Does *not* enforce
    /// substring-freeness; use [`preprocess_substring_free`] for that.
    pub fn new(reads: Vec<Read>) -> Result<Instance> {
        for (i, read) in reads.iter().enumerate() {
            if reads[..i].iter().any(|r| r.id == read.id) {
                return Err(Error::DuplicateReadId {
                    id: read.id.clone(),
                });
            }
        }
        Ok(Instance { reads })
    }

    pub fn reads(&self) -> &[Read] {
        &self.reads
    }

    /// Number of reads `m`.
    pub fn len(&self) -> usize {
        self.reads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reads.is_empty()
    }

    /// Total length `‖S‖` of the read sequences.
    pub fn total_length(&self) -> usize {
        self.reads.iter().map(|r| r.seq.len()).sum()
    }

    /// Whether no read (in either orientation) is contained in a different
    /// read. Holds for every preprocessed instance.
    pub fn is_substring_free(&self) -> bool {
        for (i, r) in self.reads.iter().enumerate() {
            for (j, q) in self.reads.iter().enumerate() {
                if i != j && contained_in(r, q) {
                    return false;
                }
            }
        }
        true
    }
}

/// Whether `r` (or its reverse complement) occurs inside `q` or the reverse
/// complement of `q`. Since containment commutes with reverse complement,
/// checking `r.seq` against both orientations of `q` covers all four cases.
fn contained_in(r: &Read, q: &Read) -> bool {
    q.seq.contains(&r.seq) || q.seq.reverse_complement().contains(&r.seq)
}

/// Removes reads that are redundant under reverse-complement containment.
///
/// A read is dropped when it occurs (in either orientation) inside a
/// *strictly longer* read, or inside an *earlier* read of equal length
/// (which covers exact duplicates and reverse-complement duplicates).
/// Containment is transitive, so every dropped read is contained in some
/// retained read, and the retained set — input order preserved — satisfies
/// the substring-free invariant.
pub fn preprocess_substring_free(reads: Vec<Read>) -> Result<Instance> {
    let instance = Instance::new(reads)?;
    let reads = instance.reads;
    let keep: Vec<bool> = reads
        .iter()
        .enumerate()
        .map(|(i, r)| {
            !reads.iter().enumerate().any(|(j, q)| {
                i != j
                    && contained_in(r, q)
                    && (q.seq.len() > r.seq.len() || (q.seq.len() == r.seq.len() && j < i))
            })
        })
        .collect();
    let retained = reads
        .into_iter()
        .zip(keep)
        .filter_map(|(r, k)| k.then_some(r))
        .collect();
    Ok(Instance { reads: retained })
}

/// Whether `u` contains, for every read of the instance, the read or its
/// reverse complement as a substring. Vacuously true for empty instances.
pub fn is_superstring_rc(u: &Dna, instance: &Instance) -> bool {
    instance
        .reads()
        .iter()
        .all(|r| u.contains(&r.seq) || u.contains(&r.seq.reverse_complement()))
}

/// First read of the instance not covered by `u`, if any. Used by
/// verification to produce an actionable message.
pub fn first_uncovered<'a>(u: &Dna, instance: &'a Instance) -> Option<&'a Read> {
    instance
        .reads()
        .iter()
        .find(|r| !u.contains(&r.seq) && !u.contains(&r.seq.reverse_complement()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dna(s: &str) -> Dna {
        Dna::parse(s).unwrap()
    }

    fn reads(seqs: &[&str]) -> Vec<Read> {
        seqs.iter()
            .enumerate()
            .map(|(i, s)| Read::new(format!("r{i}"), dna(s)).unwrap())
            .collect()
    }

    #[test]
    fn read_requires_nonempty_sequence() {
        assert!(matches!(
            Read::new("r0", Dna::empty()),
            Err(Error::EmptyRead { .. })
        ));
    }

    #[test]
    fn instance_rejects_duplicate_ids() {
        let rs = vec![
            Read::new("r0", dna("atg")).unwrap(),
            Read::new("r0", dna("ggc")).unwrap(),
        ];
        assert!(matches!(
            Instance::new(rs),
            Err(Error::DuplicateReadId { .. })
        ));
    }

    #[test]
    fn oriented_string_materializes_both_strands() {
        let r = Read::new("r0", dna("atg")).unwrap();
        assert_eq!(OrientedString::new(&r, Orientation::Forward).seq, dna("atg"));
        assert_eq!(
            OrientedString::new(&r, Orientation::ReverseComplement).seq,
            dna("cat")
        );
    }

    #[test]
    fn preprocess_drops_contained_reads() {
        let inst = preprocess_substring_free(reads(&["atgca", "tgc"])).unwrap();
        assert_eq!(inst.len(), 1);
        assert_eq!(inst.reads()[0].seq, dna("atgca"));

        // Containment also counts when the shorter read comes first.
        let inst = preprocess_substring_free(reads(&["tgc", "atgca"])).unwrap();
        assert_eq!(inst.len(), 1);
        assert_eq!(inst.reads()[0].seq, dna("atgca"));
    }

    #[test]
    fn preprocess_drops_rc_duplicates_keeping_the_earlier_read() {
        // "cat" is the reverse complement of "atg".
        let inst = preprocess_substring_free(reads(&["atg", "cat"])).unwrap();
        assert_eq!(inst.len(), 1);
        assert_eq!(inst.reads()[0].seq, dna("atg"));
    }

    #[test]
    fn preprocess_keeps_unrelated_reads_in_order() {
        let inst = preprocess_substring_free(reads(&["atg", "tga"])).unwrap();
        assert_eq!(inst.len(), 2);
        assert_eq!(inst.reads()[0].seq, dna("atg"));
        assert_eq!(inst.reads()[1].seq, dna("tga"));
        assert!(inst.is_substring_free());
    }

    #[test]
    fn preprocess_handles_containment_chains() {
        let inst = preprocess_substring_free(reads(&["tg", "atgc", "atgca"])).unwrap();
        assert_eq!(inst.len(), 1);
        assert_eq!(inst.reads()[0].seq, dna("atgca"));
        assert!(inst.is_substring_free());
    }

    #[test]
    fn superstring_check_accepts_either_orientation() {
        let inst = preprocess_substring_free(reads(&["atg", "tca"])).unwrap();
        // "atga" contains "atg" and "tga" = rc("tca").
        assert!(is_superstring_rc(&dna("atga"), &inst));
        assert!(!is_superstring_rc(&dna("atg"), &inst));
        assert_eq!(
            first_uncovered(&dna("atg"), &inst).map(|r| r.id.as_str()),
            Some("r1")
        );
    }

    #[test]
    fn empty_superstring_covers_exactly_the_empty_instance() {
        let empty = Instance::new(Vec::new()).unwrap();
        assert!(is_superstring_rc(&Dna::empty(), &empty));
        let inst = preprocess_substring_free(reads(&["atg"])).unwrap();
        assert!(!is_superstring_rc(&Dna::empty(), &inst));
    }
}
