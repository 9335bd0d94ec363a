//! Cycle covers over oriented reads.
//!
//! A cycle visits oriented reads `v_1 → v_2 → … → v_r → v_1`; its weight is
//! the sum of overlap distances along all edges including the closing one.
//! A cover assigns every read of an instance to exactly one cycle, in
//! exactly one orientation. The weight of an optimal cover is a lower bound
//! on the optimal superstring length, which is what makes covers useful as
//! an audit oracle.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::instance::{Instance, Orientation, OrientedString};
use crate::strings::{dist, prefix_part, Dna};

/// Largest instance the exhaustive cover search accepts by default.
pub const DEFAULT_COVER_CAP: usize = 6;

/// Overlap distance along the edge from `x` to `y`.
pub fn dist_edge(x: &OrientedString, y: &OrientedString) -> usize {
    dist(&x.seq, &y.seq)
}

/// A directed cycle of oriented reads. The weight is fixed at construction
/// and always equals the sum of `dist_edge` over consecutive vertices,
/// wrapping around; a single vertex carries its self-distance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cycle {
    vertices: Vec<OrientedString>,
    weight: usize,
}

impl Cycle {
    /// Builds a cycle from a nonempty vertex list in path order.
    pub fn new(vertices: Vec<OrientedString>) -> Cycle {
        assert!(!vertices.is_empty(), "a cycle has at least one vertex");
        let weight = edges(&vertices).map(|(x, y)| dist_edge(x, y)).sum();
        Cycle { vertices, weight }
    }

    pub fn vertices(&self) -> &[OrientedString] {
        &self.vertices
    }

    /// Number of vertices (always at least 1).
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// Total overlap distance around the cycle, closing edge included.
    pub fn weight(&self) -> usize {
        self.weight
    }

    /// The same cycle with the vertex at `start` listed first.
    pub fn rotated(&self, start: usize) -> Cycle {
        let mut vertices = self.vertices.clone();
        vertices.rotate_left(start % self.vertices.len());
        Cycle::new(vertices)
    }
}

/// Consecutive vertex pairs around the cycle, closing edge last.
fn edges(vertices: &[OrientedString]) -> impl Iterator<Item = (&OrientedString, &OrientedString)> {
    let n = vertices.len();
    (0..n).map(move |i| (&vertices[i], &vertices[(i + 1) % n]))
}

/// The chain of the cycle's vertices in path order (the string a solver
/// emits for this cycle).
pub fn cycle_string(cycle: &Cycle) -> Dna {
    crate::strings::chain(
        &cycle
            .vertices
            .iter()
            .map(|v| v.seq.clone())
            .collect::<Vec<_>>(),
    )
}

/// The concatenation of prefix parts around the whole cycle, closing edge
/// included. Its length equals the cycle weight, and it is the shortest
/// repeating factor of the cycle's chain.
pub fn cycle_factor(cycle: &Cycle) -> Dna {
    let mut out = Dna::empty();
    for (x, y) in edges(&cycle.vertices) {
        out = out.concat(&prefix_part(&x.seq, &y.seq));
    }
    out
}

/// A set of vertex-disjoint cycles covering an instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleCover {
    pub cycles: Vec<Cycle>,
    pub total_weight: usize,
}

impl CycleCover {
    pub fn new(cycles: Vec<Cycle>) -> CycleCover {
        let total_weight = cycles.iter().map(Cycle::weight).sum();
        CycleCover {
            cycles,
            total_weight,
        }
    }
}

/// Exhaustively finds a minimum-weight cycle cover, trying every
/// orientation assignment (reverse-complement palindromes are pinned to
/// forward) and every successor permutation. Ties between equal-weight
/// covers are broken by the lexicographically smallest canonical encoding,
/// so the result is deterministic. Instances above [`DEFAULT_COVER_CAP`]
/// reads are rejected.
pub fn brute_force_optimal_cycle_cover(instance: &Instance) -> Result<CycleCover> {
    brute_force_optimal_cycle_cover_with_cap(instance, DEFAULT_COVER_CAP)
}

/// [`brute_force_optimal_cycle_cover`] with an explicit read cap.
pub fn brute_force_optimal_cycle_cover_with_cap(
    instance: &Instance,
    cap: usize,
) -> Result<CycleCover> {
    let m = instance.len();
    if m > cap {
        return Err(Error::TooLarge {
            what: "exhaustive cycle cover",
            size: m,
            limit: cap,
        });
    }
    if m == 0 {
        return Ok(CycleCover::new(Vec::new()));
    }

    let orientation_options: Vec<&[Orientation]> = instance
        .reads()
        .iter()
        .map(|r| {
            if r.seq.is_rc_palindrome() {
                &[Orientation::Forward][..]
            } else {
                &[Orientation::Forward, Orientation::ReverseComplement][..]
            }
        })
        .collect();

    let mut best: Option<(usize, CoverKey, CycleCover)> = None;
    let mut assignment = vec![0usize; m];
    loop {
        let vertices: Vec<OrientedString> = instance
            .reads()
            .iter()
            .enumerate()
            .map(|(i, r)| OrientedString::new(r, orientation_options[i][assignment[i]]))
            .collect();
        let d: Vec<Vec<usize>> = vertices
            .iter()
            .map(|x| vertices.iter().map(|y| dist_edge(x, y)).collect())
            .collect();

        let mut successor = vec![usize::MAX; m];
        let mut used = vec![false; m];
        search_permutations(
            0,
            &mut successor,
            &mut used,
            &d,
            &vertices,
            0,
            &mut best,
        );

        // Advance the mixed-radix orientation counter.
        let mut i = 0;
        loop {
            if i == m {
                let (_, _, cover) = best.expect("at least one cover exists");
                return Ok(cover);
            }
            assignment[i] += 1;
            if assignment[i] < orientation_options[i].len() {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
    }
}

/// Canonical encoding of a cover used for deterministic tie-breaking:
/// each cycle rotated to start at its smallest `(read_id, orientation)`,
/// cycles sorted by their first entry.
type CoverKey = Vec<Vec<(String, Orientation)>>;

fn search_permutations(
    position: usize,
    successor: &mut Vec<usize>,
    used: &mut Vec<bool>,
    d: &[Vec<usize>],
    vertices: &[OrientedString],
    weight_so_far: usize,
    best: &mut Option<(usize, CoverKey, CycleCover)>,
) {
    let m = successor.len();
    if position == m {
        let (key, cover) = canonical_cover(successor, vertices);
        match best {
            Some((w, k, _)) if (weight_so_far, &key) >= (*w, k) => {}
            _ => *best = Some((weight_so_far, key, cover)),
        }
        return;
    }
    if let Some((w, _, _)) = best {
        if weight_so_far > *w {
            return; // no tie or improvement can come from here
        }
    }
    for next in 0..m {
        if !used[next] {
            used[next] = true;
            successor[position] = next;
            search_permutations(
                position + 1,
                successor,
                used,
                d,
                vertices,
                weight_so_far + d[position][next],
                best,
            );
            used[next] = false;
        }
    }
}

/// Decomposes a successor permutation into cycles in canonical form.
fn canonical_cover(successor: &[usize], vertices: &[OrientedString]) -> (CoverKey, CycleCover) {
    let m = successor.len();
    let mut seen = vec![false; m];
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for start in 0..m {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(i);
            i = successor[i];
        }
        // Rotate so the smallest (read_id, orientation) comes first.
        let min_pos = (0..cycle.len())
            .min_by_key(|&p| vertices[cycle[p]].sort_key())
            .unwrap();
        cycle.rotate_left(min_pos);
        cycles.push(cycle);
    }
    cycles.sort_by(|a, b| vertices[a[0]].sort_key().cmp(&vertices[b[0]].sort_key()));

    let key: CoverKey = cycles
        .iter()
        .map(|c| {
            c.iter()
                .map(|&i| (vertices[i].read_id.clone(), vertices[i].orientation))
                .collect()
        })
        .collect();
    let cover = CycleCover::new(
        cycles
            .iter()
            .map(|c| Cycle::new(c.iter().map(|&i| vertices[i].clone()).collect()))
            .collect(),
    );
    (key, cover)
}
