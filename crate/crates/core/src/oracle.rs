//! Exhaustive ground truth at small order.
//!
//! Every labeled signed graph (or signed bipartite graph) is visited by a
//! base-3 counter over its edge slots: each slot is absent, positive or
//! negative. There is no isomorphism reduction. Sizes beyond the guards are
//! refused with [`Error::ResourceGuard`] rather than truncated.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::graph::{DegreeSet, Sign, SignedBipartiteGraph, SignedDegrees, SignedGraph};

/// Largest order accepted by the general-graph oracle (15 edge slots).
pub const MAX_GRAPH_ORDER: usize = 6;
/// Largest `p * q` accepted by the bipartite oracle.
pub const MAX_BIPARTITE_SLOTS: usize = 14;

/// One point of the enumeration: a state for each edge slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSlotAssignment {
    pub slots: Vec<(usize, usize)>,
    pub assignment: Vec<Option<Sign>>,
}

impl EdgeSlotAssignment {
    pub fn to_graph(&self, n: usize) -> SignedGraph {
        let mut g = SignedGraph::new(n);
        for (&(a, b), state) in self.slots.iter().zip(&self.assignment) {
            if let Some(sign) = state {
                g.add_edge(a, b, *sign).expect("slots are distinct pairs");
            }
        }
        g
    }

    pub fn to_bipartite(&self, p: usize, q: usize) -> SignedBipartiteGraph {
        let mut g = SignedBipartiteGraph::new(p, q);
        for (&(u, v), state) in self.slots.iter().zip(&self.assignment) {
            if let Some(sign) = state {
                g.add_edge(u, v, *sign).expect("slots are distinct pairs");
            }
        }
        g
    }
}

/// Base-3 counter over a list of slots; yields all `3^slots` assignments in
/// lexicographic order (absent < positive < negative).
#[derive(Debug, Clone)]
pub struct AssignmentCounter {
    slots: Vec<(usize, usize)>,
    digits: Vec<u8>,
    done: bool,
}

impl AssignmentCounter {
    pub fn new(slots: Vec<(usize, usize)>) -> Self {
        let digits = vec![0; slots.len()];
        AssignmentCounter {
            slots,
            digits,
            done: false,
        }
    }

    /// Current assignment as raw digits, or `None` once exhausted.
    fn step(&self) -> Option<&[u8]> {
        if self.done {
            return None;
        }
        Some(&self.digits)
    }

    fn advance(&mut self) {
        for d in self.digits.iter_mut().rev() {
            if *d < 2 {
                *d += 1;
                return;
            }
            *d = 0;
        }
        self.done = true;
    }
}

fn digit_sign(d: u8) -> Option<Sign> {
    match d {
        0 => None,
        1 => Some(Sign::Positive),
        _ => Some(Sign::Negative),
    }
}

impl Iterator for AssignmentCounter {
    type Item = EdgeSlotAssignment;

    fn next(&mut self) -> Option<EdgeSlotAssignment> {
        let assignment = self.step()?.iter().map(|&d| digit_sign(d)).collect();
        let item = EdgeSlotAssignment {
            slots: self.slots.clone(),
            assignment,
        };
        self.advance();
        Some(item)
    }
}

fn pair_slots(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect()
}

fn cross_slots(p: usize, q: usize) -> Vec<(usize, usize)> {
    (0..p).flat_map(|u| (0..q).map(move |v| (u, v))).collect()
}

fn guard_order(n: usize) -> Result<()> {
    if n > MAX_GRAPH_ORDER {
        return Err(Error::ResourceGuard(format!(
            "signed graphs of order {n} exceed the limit {MAX_GRAPH_ORDER}"
        )));
    }
    Ok(())
}

fn guard_parts(p: usize, q: usize) -> Result<()> {
    match p.checked_mul(q) {
        Some(slots) if slots <= MAX_BIPARTITE_SLOTS => Ok(()),
        _ => Err(Error::ResourceGuard(format!(
            "p * q = {p} * {q} exceeds the limit {MAX_BIPARTITE_SLOTS}"
        ))),
    }
}

/// Every simple signed graph on `n` labeled vertices, exactly once.
pub fn enumerate_signed_graphs(n: usize) -> Result<impl Iterator<Item = SignedGraph>> {
    guard_order(n)?;
    Ok(AssignmentCounter::new(pair_slots(n)).map(move |a| a.to_graph(n)))
}

/// Every simple signed bipartite graph with labeled parts of sizes `p`, `q`.
pub fn enumerate_signed_bipartite(
    p: usize,
    q: usize,
) -> Result<impl Iterator<Item = SignedBipartiteGraph>> {
    guard_parts(p, q)?;
    Ok(AssignmentCounter::new(cross_slots(p, q)).map(move |a| a.to_bipartite(p, q)))
}

// Degree scans below work on raw counter digits, skipping graph
// construction; they only need the per-vertex sums.
fn scan_degrees(
    slots: &[(usize, usize)],
    right_offset: usize,
    total: usize,
    mut visit: impl FnMut(&[i64]) -> bool,
) {
    let mut counter = AssignmentCounter::new(slots.to_vec());
    let mut degrees = vec![0i64; total];
    while let Some(digits) = counter.step() {
        degrees.iter_mut().for_each(|d| *d = 0);
        for (&(a, b), &digit) in slots.iter().zip(digits) {
            let w = match digit {
                0 => continue,
                1 => 1,
                _ => -1,
            };
            degrees[a] += w;
            degrees[b + right_offset] += w;
        }
        if visit(&degrees) {
            return;
        }
        counter.advance();
    }
}

fn sorted_desc(xs: &[i64]) -> Vec<i64> {
    let mut v = xs.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// True iff some signed graph on `seq.len()` vertices has `seq` (in any
/// order) as its signed degree sequence.
pub fn oracle_s_graphical(seq: &[i64]) -> Result<bool> {
    let n = seq.len();
    guard_order(n)?;
    let target = sorted_desc(seq);
    let mut found = false;
    scan_degrees(&pair_slots(n), 0, n, |deg| {
        found = sorted_desc(deg) == target;
        found
    });
    Ok(found)
}

/// All sorted (non-increasing) signed degree sequences of order `n`.
pub fn realizable_signed_sequences(n: usize) -> Result<HashSet<Vec<i64>>> {
    guard_order(n)?;
    let mut out = HashSet::new();
    scan_degrees(&pair_slots(n), 0, n, |deg| {
        out.insert(sorted_desc(deg));
        false
    });
    Ok(out)
}

/// True iff some signed bipartite graph with parts of sizes `alpha.len()`
/// and `beta.len()` has these signed degree sequences.
pub fn oracle_bipartite(alpha: &[i64], beta: &[i64]) -> Result<bool> {
    let (p, q) = (alpha.len(), beta.len());
    guard_parts(p, q)?;
    let (ta, tb) = (sorted_desc(alpha), sorted_desc(beta));
    let mut found = false;
    scan_degrees(&cross_slots(p, q), p, p + q, |deg| {
        found = sorted_desc(&deg[..p]) == ta && sorted_desc(&deg[p..]) == tb;
        found
    });
    Ok(found)
}

/// All realizable `(alpha, beta)` pairs for parts of sizes `p` and `q`,
/// each sorted non-increasing.
pub fn realizable_bipartite_pairs(p: usize, q: usize) -> Result<HashSet<(Vec<i64>, Vec<i64>)>> {
    guard_parts(p, q)?;
    let mut out = HashSet::new();
    scan_degrees(&cross_slots(p, q), p, p + q, |deg| {
        out.insert((sorted_desc(&deg[..p]), sorted_desc(&deg[p..])));
        false
    });
    Ok(out)
}

/// True iff some signed bipartite graph with parts of sizes `p`, `q` (and
/// connected, if required) has signed degree set exactly `set`.
pub fn oracle_degree_set_realizable(
    set: &DegreeSet,
    p: usize,
    q: usize,
    require_connected: bool,
) -> Result<bool> {
    guard_parts(p, q)?;
    if p + q == 0 {
        return Ok(false);
    }
    for g in enumerate_signed_bipartite(p, q)? {
        if g.signed_degree_set()? == *set && (!require_connected || g.is_connected()?) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Every signed degree set (ascending) realized by some graph with parts
/// of sizes `p`, `q`, optionally restricted to connected graphs.
pub fn realizable_degree_sets(
    p: usize,
    q: usize,
    require_connected: bool,
) -> Result<BTreeSet<Vec<i64>>> {
    guard_parts(p, q)?;
    let mut out = BTreeSet::new();
    if p + q == 0 {
        return Ok(out);
    }
    for g in enumerate_signed_bipartite(p, q)? {
        if !require_connected || g.is_connected()? {
            out.insert(g.signed_degree_set()?.to_vec());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stream_cardinalities() {
        assert_eq!(enumerate_signed_graphs(1).unwrap().count(), 1);
        assert_eq!(enumerate_signed_graphs(2).unwrap().count(), 3);
        assert_eq!(enumerate_signed_graphs(4).unwrap().count(), 729);
        assert_eq!(enumerate_signed_bipartite(1, 1).unwrap().count(), 3);
        assert_eq!(enumerate_signed_bipartite(2, 2).unwrap().count(), 81);
        assert_eq!(enumerate_signed_bipartite(3, 3).unwrap().count(), 19683);
    }

    #[test]
    fn streams_are_distinct() {
        let all: Vec<_> = enumerate_signed_bipartite(2, 2).unwrap().collect();
        for (i, a) in all.iter().enumerate() {
            assert!(a.check_invariants());
            for b in &all[i + 1..] {
                assert_ne!(a, b);
            }
        }
        let graphs: Vec<Vec<_>> = enumerate_signed_graphs(3)
            .unwrap()
            .map(|g| g.edges().collect())
            .collect();
        let unique: std::collections::HashSet<_> = graphs.iter().collect();
        assert_eq!(unique.len(), 27);
    }

    #[test]
    fn guards() {
        assert!(matches!(
            enumerate_signed_graphs(7),
            Err(Error::ResourceGuard(_))
        ));
        assert!(matches!(
            enumerate_signed_bipartite(3, 5),
            Err(Error::ResourceGuard(_))
        ));
        assert!(matches!(
            oracle_s_graphical(&[0; 7]),
            Err(Error::ResourceGuard(_))
        ));
        assert!(matches!(
            oracle_bipartite(&[0; 5], &[0; 3]),
            Err(Error::ResourceGuard(_))
        ));
        assert!(enumerate_signed_bipartite(2, 7).is_ok());
    }

    #[test]
    fn sequence_oracle() {
        assert_eq!(oracle_s_graphical(&[1, 1]), Ok(true));
        assert_eq!(oracle_s_graphical(&[1, -1]), Ok(false));
        assert_eq!(oracle_s_graphical(&[2, 2, 2]), Ok(true));
        let two: HashSet<Vec<i64>> = [vec![0, 0], vec![1, 1], vec![-1, -1]].into_iter().collect();
        assert_eq!(realizable_signed_sequences(2).unwrap(), two);
    }

    #[test]
    fn bipartite_oracle() {
        assert_eq!(oracle_bipartite(&[1], &[1]), Ok(true));
        assert_eq!(oracle_bipartite(&[1, -1], &[0]), Ok(true));
        assert_eq!(oracle_bipartite(&[-1, 1], &[0]), Ok(true));
        assert_eq!(oracle_bipartite(&[2], &[1]), Ok(false));
        // u1 needs +2 on both v's, u2 needs -2: v-degrees are forced to 0, 0
        assert_eq!(oracle_bipartite(&[2, -2], &[1, -1]), Ok(false));
        assert_eq!(oracle_bipartite(&[2, -2], &[0, 0]), Ok(true));
        let single: HashSet<_> = [(vec![0], vec![0]), (vec![1], vec![1]), (vec![-1], vec![-1])]
            .into_iter()
            .collect();
        assert_eq!(realizable_bipartite_pairs(1, 1).unwrap(), single);
    }

    #[test]
    fn degree_set_oracle() {
        let s = |xs: &[i64]| DegreeSet::new(xs.iter().copied()).unwrap();
        assert_eq!(oracle_degree_set_realizable(&s(&[0]), 2, 2, true), Ok(true));
        assert_eq!(oracle_degree_set_realizable(&s(&[1]), 1, 1, true), Ok(true));
        assert_eq!(
            oracle_degree_set_realizable(&s(&[2]), 1, 1, false),
            Ok(false)
        );
        // a connected 1x1 graph needs its single edge
        assert_eq!(
            oracle_degree_set_realizable(&s(&[0]), 1, 1, true),
            Ok(false)
        );
        let sets = realizable_degree_sets(1, 1, true).unwrap();
        assert_eq!(sets, [vec![-1], vec![1]].into_iter().collect());
    }
}
