//! Construction of connected signed bipartite graphs with a prescribed
//! signed degree set.
//!
//! Positive sets use a block construction: for `s1 < s2 < ... < sn` with
//! increments `d1 = s1`, `di = si - s(i-1)`, blocks `Xi`, `Yi` have size `di`
//! and blocks `Xi'`, `Yi'` (for `i >= 2`) have size `s(i-1)`. Positive joins
//! `Xi + Yj` (i >= j), `Xi' + Yi` and `Xi' + Yi'` give every vertex of
//! `Xi`, `Xi'` degree `si`, every `Yi` degree `sn` and every `Yi'` degree
//! `s(i-1)`. Every other set is reduced to positive sets by sign flipping
//! and by zero-degree gluing gadgets that leave existing degrees untouched.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{DegreeSet, Sign, SignedBipartiteGraph, SignedDegrees, Vertex};

/// Which construction produced a realization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RealizationCase {
    Positive,
    Negative,
    ZeroOnly,
    NonnegWithZero,
    NonposWithZero,
    MixedNonzero,
    MixedWithZero,
}

impl RealizationCase {
    pub fn name(self) -> &'static str {
        match self {
            RealizationCase::Positive => "positive",
            RealizationCase::Negative => "negative",
            RealizationCase::ZeroOnly => "zero_only",
            RealizationCase::NonnegWithZero => "nonneg_with_zero",
            RealizationCase::NonposWithZero => "nonpos_with_zero",
            RealizationCase::MixedNonzero => "mixed_nonzero",
            RealizationCase::MixedWithZero => "mixed_with_zero",
        }
    }
}

impl fmt::Display for RealizationCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone)]
pub struct RealizationReport {
    pub graph: SignedBipartiteGraph,
    pub case_used: RealizationCase,
    /// Block label and vertex count, in order of first appearance (U then V).
    pub block_sizes: Vec<(String, usize)>,
}

impl RealizationReport {
    fn new(graph: SignedBipartiteGraph, case_used: RealizationCase) -> Self {
        let block_sizes = block_sizes(&graph);
        RealizationReport {
            graph,
            case_used,
            block_sizes,
        }
    }

    /// True when the graph is connected and has exactly `target` as its
    /// signed degree set.
    pub fn realizes(&self, target: &DegreeSet) -> bool {
        self.graph.signed_degree_set().ok().as_ref() == Some(target)
            && self.graph.is_connected() == Ok(true)
    }
}

fn block_sizes(g: &SignedBipartiteGraph) -> Vec<(String, usize)> {
    if g.labels().next().is_none() {
        return vec![("U".to_string(), g.p()), ("V".to_string(), g.q())];
    }
    let mut sizes: Vec<(String, usize)> = Vec::new();
    for (_, label) in g.labels() {
        match sizes.iter_mut().find(|(l, _)| l == label) {
            Some((_, n)) => *n += 1,
            None => sizes.push((label.to_string(), 1)),
        }
    }
    sizes
}

/// Block construction for a set of positive integers. All edges are
/// positive and `|U| = |V| = sum(S)`.
pub fn realize_positive_set(set: &DegreeSet) -> Result<RealizationReport> {
    if set.min() < 1 {
        return Err(Error::InvalidDegreeSet(format!(
            "expected positive integers, found {}",
            set.min()
        )));
    }
    let graph = positive_blocks(&set.to_vec());
    Ok(RealizationReport::new(graph, RealizationCase::Positive))
}

fn positive_blocks(sorted: &[i64]) -> SignedBipartiteGraph {
    let mut g = SignedBipartiteGraph::new(0, 0);
    // x_blocks[i] / y_blocks[i]: vertices of X_(i+1) / Y_(i+1)
    let mut x_blocks: Vec<Vec<usize>> = Vec::with_capacity(sorted.len());
    let mut y_blocks: Vec<Vec<usize>> = Vec::with_capacity(sorted.len());
    let mut x_primes: Vec<Vec<usize>> = Vec::new();
    let mut y_primes: Vec<Vec<usize>> = Vec::new();

    let add_block = |g: &mut SignedBipartiteGraph, size: i64, name: String| {
        let xs: Vec<usize> = (0..size).map(|_| g.add_u_vertex()).collect();
        let ys: Vec<usize> = (0..size).map(|_| g.add_v_vertex()).collect();
        for &x in &xs {
            g.set_label(Vertex::U(x), format!("X_{name}")).unwrap();
        }
        for &y in &ys {
            g.set_label(Vertex::V(y), format!("Y_{name}")).unwrap();
        }
        (xs, ys)
    };

    let mut previous = 0;
    for (i, &s) in sorted.iter().enumerate() {
        let (xs, ys) = add_block(&mut g, s - previous, format!("{}", i + 1));
        x_blocks.push(xs);
        y_blocks.push(ys);
        if i > 0 {
            let (xs, ys) = add_block(&mut g, previous, format!("{}'", i + 1));
            x_primes.push(xs);
            y_primes.push(ys);
        }
        previous = s;
    }

    let n = sorted.len();
    for (i, xs) in x_blocks.iter().enumerate() {
        for ys in &y_blocks[..=i] {
            g.join_all_positive(xs, ys).expect("blocks are disjoint");
        }
    }
    for i in 1..n {
        g.join_all_positive(&x_primes[i - 1], &y_blocks[i])
            .expect("blocks are disjoint");
        g.join_all_positive(&x_primes[i - 1], &y_primes[i - 1])
            .expect("blocks are disjoint");
    }
    g
}

/// Sign-flipped block construction for a set of negative integers.
pub fn realize_negative_set(set: &DegreeSet) -> Result<RealizationReport> {
    if set.max() > -1 {
        return Err(Error::InvalidDegreeSet(format!(
            "expected negative integers, found {}",
            set.max()
        )));
    }
    let mirrored: Vec<i64> = set.iter().rev().map(|s| -s).collect();
    let graph = positive_blocks(&mirrored).flipped();
    Ok(RealizationReport::new(graph, RealizationCase::Negative))
}

/// The 2x2 alternating square: `u1v1`, `u2v2` positive and `u1v2`, `u2v1`
/// negative. Every vertex has signed degree 0.
pub fn realize_zero_set() -> RealizationReport {
    let mut g = SignedBipartiteGraph::new(2, 2);
    g.add_edge(0, 0, Sign::Positive).unwrap();
    g.add_edge(1, 1, Sign::Positive).unwrap();
    g.add_edge(0, 1, Sign::Negative).unwrap();
    g.add_edge(1, 0, Sign::Negative).unwrap();
    RealizationReport::new(g, RealizationCase::ZeroOnly)
}

fn require_connected(g: &SignedBipartiteGraph, what: &str) -> Result<()> {
    if g.p() == 0 || g.q() == 0 {
        return Err(Error::EmptyPart { p: g.p(), q: g.q() });
    }
    if !g.is_connected()? {
        return Err(Error::InvalidDegreeSet(format!("{what} is not connected")));
    }
    Ok(())
}

/// Adds four vertices `x1, x2` (in U) and `y1, y2` (in V) of signed degree
/// 0 attached at `u1` and `v1`: positive `u1y1`, `x1v1`, `x2y2` and negative
/// `u1y2`, `x1y1`, `x2v1`. Degrees of the existing vertices do not change.
pub fn attach_zero_gadget(
    g: &SignedBipartiteGraph,
    u1: usize,
    v1: usize,
) -> Result<SignedBipartiteGraph> {
    require_connected(g, "base graph")?;
    g.signed_degree(Vertex::U(u1))?;
    g.signed_degree(Vertex::V(v1))?;

    let mut out = g.clone();
    let x1 = out.add_u_vertex();
    let x2 = out.add_u_vertex();
    let y1 = out.add_v_vertex();
    let y2 = out.add_v_vertex();
    for (v, label) in [
        (Vertex::U(x1), "x_1"),
        (Vertex::U(x2), "x_2"),
        (Vertex::V(y1), "y_1"),
        (Vertex::V(y2), "y_2"),
    ] {
        out.set_label(v, label)?;
    }
    out.add_edge(u1, y1, Sign::Positive)?;
    out.add_edge(x1, v1, Sign::Positive)?;
    out.add_edge(x2, y2, Sign::Positive)?;
    out.add_edge(u1, y2, Sign::Negative)?;
    out.add_edge(x1, y1, Sign::Negative)?;
    out.add_edge(x2, v1, Sign::Negative)?;
    Ok(out)
}

/// Disjoint union of four connected graphs tied together at the first
/// u-vertex of `g1`, `g1_copy` and the first v-vertex of `g2`, `g2_copy`:
/// positive `u1v2'`, `u1'v2` and negative `u1v2`, `u1'v2'`. Each anchor gains
/// one edge of each sign, so no signed degree changes.
pub fn bridge_mixed(
    g1: &SignedBipartiteGraph,
    g1_copy: &SignedBipartiteGraph,
    g2: &SignedBipartiteGraph,
    g2_copy: &SignedBipartiteGraph,
) -> Result<SignedBipartiteGraph> {
    require_connected(g1, "G1")?;
    require_connected(g1_copy, "G1'")?;
    require_connected(g2, "G2")?;
    require_connected(g2_copy, "G2'")?;

    let mut out = SignedBipartiteGraph::new(0, 0);
    let mut offsets = Vec::with_capacity(4);
    for (part, prefix) in [(g1, "G1"), (g1_copy, "G1'"), (g2, "G2"), (g2_copy, "G2'")] {
        let mut part = part.clone();
        part.prefix_labels(prefix);
        offsets.push(out.append(&part));
    }
    let u1 = offsets[0].0;
    let u1c = offsets[1].0;
    let v2 = offsets[2].1;
    let v2c = offsets[3].1;
    out.add_edge(u1, v2c, Sign::Positive)?;
    out.add_edge(u1c, v2, Sign::Positive)?;
    out.add_edge(u1, v2, Sign::Negative)?;
    out.add_edge(u1c, v2c, Sign::Negative)?;
    Ok(out)
}

/// Disjoint union of two connected graphs plus new vertices `x` (in U) and
/// `y` (in V): positive `u1v2`, `u2y`, `xv1` and negative `u1y`, `u2v1`,
/// `xv2`, anchored at the first vertex of each part. `x` and `y` get signed
/// degree 0 and no existing degree changes.
pub fn bridge_mixed_zero(
    g1: &SignedBipartiteGraph,
    g2: &SignedBipartiteGraph,
) -> Result<SignedBipartiteGraph> {
    require_connected(g1, "G1")?;
    require_connected(g2, "G2")?;

    let mut out = SignedBipartiteGraph::new(0, 0);
    let mut first = g1.clone();
    first.prefix_labels("G1");
    let (u1, v1) = out.append(&first);
    let mut second = g2.clone();
    second.prefix_labels("G2");
    let (u2, v2) = out.append(&second);
    let x = out.add_u_vertex();
    let y = out.add_v_vertex();
    out.set_label(Vertex::U(x), "x")?;
    out.set_label(Vertex::V(y), "y")?;

    out.add_edge(u1, v2, Sign::Positive)?;
    out.add_edge(u2, y, Sign::Positive)?;
    out.add_edge(x, v1, Sign::Positive)?;
    out.add_edge(u1, y, Sign::Negative)?;
    out.add_edge(u2, v1, Sign::Negative)?;
    out.add_edge(x, v2, Sign::Negative)?;
    Ok(out)
}

/// Builds a connected signed bipartite graph whose signed degree set is
/// exactly `set`. No claim is made about the order of the graph.
pub fn realize_set(set: &DegreeSet) -> Result<RealizationReport> {
    let positives = set.filtered(|x| x > 0);
    let negatives = set.filtered(|x| x < 0);
    let has_zero = set.contains(0);

    let report = match (positives, negatives, has_zero) {
        (Some(pos), None, false) => realize_positive_set(&pos)?,
        (None, Some(neg), false) => realize_negative_set(&neg)?,
        (None, None, true) => realize_zero_set(),
        (Some(pos), None, true) => {
            let base = realize_positive_set(&pos)?.graph;
            let g = attach_zero_gadget(&base, 0, 0)?;
            RealizationReport::new(g, RealizationCase::NonnegWithZero)
        }
        (None, Some(neg), true) => {
            // mirror image of the non-negative case
            let mirrored = DegreeSet::new(neg.iter().map(|s| -s))?;
            let base = realize_positive_set(&mirrored)?.graph;
            let g = attach_zero_gadget(&base, 0, 0)?.flipped();
            RealizationReport::new(g, RealizationCase::NonposWithZero)
        }
        (Some(pos), Some(neg), false) => {
            let g1 = realize_positive_set(&pos)?.graph;
            let g2 = realize_negative_set(&neg)?.graph;
            let g = bridge_mixed(&g1, &g1.clone(), &g2, &g2.clone())?;
            RealizationReport::new(g, RealizationCase::MixedNonzero)
        }
        (Some(pos), Some(neg), true) => {
            let g1 = realize_positive_set(&pos)?.graph;
            let g2 = realize_negative_set(&neg)?.graph;
            let g = bridge_mixed_zero(&g1, &g2)?;
            RealizationReport::new(g, RealizationCase::MixedWithZero)
        }
        (None, None, false) => unreachable!("degree sets are nonempty"),
    };
    debug_assert!(report.graph.check_invariants());
    Ok(report)
}
