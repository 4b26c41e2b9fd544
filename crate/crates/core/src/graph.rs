//! Signed graphs and signed bipartite graphs.
//!
//! Both graph types are simple: a vertex pair carries no edge, a positive
//! edge, or a negative edge. Signed degrees are maintained incrementally as
//! edges are added, so degree queries are O(1).

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Label carried by every edge of a signed graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    /// Contribution of one incident edge to a signed degree.
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A vertex of a signed bipartite graph, identified by part and 0-based index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    U(usize),
    V(usize),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::U(i) => write!(f, "u{}", i + 1),
            Vertex::V(j) => write!(f, "v{}", j + 1),
        }
    }
}

/// A nonempty set of distinct integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSet(BTreeSet<i64>);

impl DegreeSet {
    pub fn new<I: IntoIterator<Item = i64>>(elements: I) -> Result<Self> {
        let set: BTreeSet<i64> = elements.into_iter().collect();
        if set.is_empty() {
            return Err(Error::InvalidDegreeSet("set is empty".into()));
        }
        Ok(DegreeSet(set))
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = i64> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: i64) -> bool {
        self.0.contains(&x)
    }

    pub fn min(&self) -> i64 {
        *self.0.first().expect("degree set is nonempty")
    }

    pub fn max(&self) -> i64 {
        *self.0.last().expect("degree set is nonempty")
    }

    pub fn as_set(&self) -> &BTreeSet<i64> {
        &self.0
    }

    /// Elements in ascending order.
    pub fn to_vec(&self) -> Vec<i64> {
        self.0.iter().copied().collect()
    }

    pub(crate) fn filtered(&self, keep: impl Fn(i64) -> bool) -> Option<DegreeSet> {
        let set: BTreeSet<i64> = self.iter().filter(|&x| keep(x)).collect();
        (!set.is_empty()).then_some(DegreeSet(set))
    }
}

impl fmt::Display for DegreeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

/// Shared queries over both graph flavours.
pub trait SignedDegrees {
    fn vertex_count(&self) -> usize;

    /// Signed degrees of all vertices. Bipartite graphs list U before V.
    fn all_degrees(&self) -> Vec<i64>;

    /// Neighbour lists of the underlying unsigned graph, indexed like
    /// [`SignedDegrees::all_degrees`].
    fn adjacency(&self) -> Vec<Vec<usize>>;

    fn signed_degree_set(&self) -> Result<DegreeSet> {
        if self.vertex_count() == 0 {
            return Err(Error::EmptyGraph);
        }
        DegreeSet::new(self.all_degrees())
    }

    /// Number of connected components of the underlying unsigned graph.
    fn component_count(&self) -> usize {
        let adj = self.adjacency();
        let mut seen = vec![false; adj.len()];
        let mut components = 0;
        let mut queue = VecDeque::new();
        for start in 0..adj.len() {
            if seen[start] {
                continue;
            }
            components += 1;
            seen[start] = true;
            queue.push_back(start);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        components
    }

    /// Connectedness of the underlying unsigned graph. With both parts
    /// nonempty this is the same as every u-vertex reaching every v-vertex.
    fn is_connected(&self) -> Result<bool> {
        if self.vertex_count() == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(self.component_count() == 1)
    }
}

/// A simple signed graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGraph {
    n: usize,
    edges: BTreeMap<(usize, usize), Sign>,
    degrees: Vec<i64>,
}

impl SignedGraph {
    pub fn new(n: usize) -> Self {
        SignedGraph {
            n,
            edges: BTreeMap::new(),
            degrees: vec![0; n],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, a: usize, b: usize, sign: Sign) -> Result<()> {
        for x in [a, b] {
            if x >= self.n {
                return Err(Error::UnknownVertex(Vertex::U(x)));
            }
        }
        if a == b {
            return Err(Error::EdgeConflict(format!("loop at vertex {}", a + 1)));
        }
        let key = (a.min(b), a.max(b));
        if self.edges.contains_key(&key) {
            return Err(Error::EdgeConflict(format!("{}-{}", key.0 + 1, key.1 + 1)));
        }
        self.edges.insert(key, sign);
        self.degrees[a] += sign.value();
        self.degrees[b] += sign.value();
        Ok(())
    }

    pub fn edge(&self, a: usize, b: usize) -> Option<Sign> {
        self.edges.get(&(a.min(b), a.max(b))).copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = ((usize, usize), Sign)> + '_ {
        self.edges.iter().map(|(&k, &s)| (k, s))
    }

    pub fn signed_degree(&self, v: usize) -> Result<i64> {
        self.degrees
            .get(v)
            .copied()
            .ok_or(Error::UnknownVertex(Vertex::U(v)))
    }

    /// Signed degree sequence, non-increasing.
    pub fn degree_sequence(&self) -> Vec<i64> {
        let mut seq = self.degrees.clone();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }
}

impl SignedDegrees for SignedGraph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn all_degrees(&self) -> Vec<i64> {
        self.degrees.clone()
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in self.edges.keys() {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }
}

/// A simple signed bipartite graph with parts `U = {u1..up}` and
/// `V = {v1..vq}`. Edges are keyed by `(u-index, v-index)`, so they can only
/// cross between the parts.
///
/// Block labels are construction metadata. They are carried through
/// serialization but ignored by equality and by every algorithm.
#[derive(Debug, Clone, Default)]
pub struct SignedBipartiteGraph {
    p: usize,
    q: usize,
    edges: BTreeMap<(usize, usize), Sign>,
    u_degrees: Vec<i64>,
    v_degrees: Vec<i64>,
    positive_edges: usize,
    labels: BTreeMap<Vertex, String>,
}

impl PartialEq for SignedBipartiteGraph {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.q == other.q && self.edges == other.edges
    }
}

impl Eq for SignedBipartiteGraph {}

impl SignedBipartiteGraph {
    /// Edgeless graph with `p` u-vertices and `q` v-vertices.
    pub fn new(p: usize, q: usize) -> Self {
        SignedBipartiteGraph {
            p,
            q,
            u_degrees: vec![0; p],
            v_degrees: vec![0; q],
            ..Default::default()
        }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn positive_edge_count(&self) -> usize {
        self.positive_edges
    }

    pub fn negative_edge_count(&self) -> usize {
        self.edges.len() - self.positive_edges
    }

    pub fn edge(&self, u: usize, v: usize) -> Option<Sign> {
        self.edges.get(&(u, v)).copied()
    }

    /// Edges sorted by `(u-index, v-index)`.
    pub fn edges(&self) -> impl Iterator<Item = ((usize, usize), Sign)> + '_ {
        self.edges.iter().map(|(&k, &s)| (k, s))
    }

    pub fn add_u_vertex(&mut self) -> usize {
        self.u_degrees.push(0);
        self.p += 1;
        self.p - 1
    }

    pub fn add_v_vertex(&mut self) -> usize {
        self.v_degrees.push(0);
        self.q += 1;
        self.q - 1
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        let ok = match v {
            Vertex::U(i) => i < self.p,
            Vertex::V(j) => j < self.q,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    /// Adds the edge `u v` with the given sign. Fails if the pair already
    /// carries an edge of either sign.
    pub fn add_edge(&mut self, u: usize, v: usize, sign: Sign) -> Result<()> {
        self.check_vertex(Vertex::U(u))?;
        self.check_vertex(Vertex::V(v))?;
        if self.edges.contains_key(&(u, v)) {
            return Err(Error::EdgeConflict(format!(
                "{}{}",
                Vertex::U(u),
                Vertex::V(v)
            )));
        }
        self.edges.insert((u, v), sign);
        self.u_degrees[u] += sign.value();
        self.v_degrees[v] += sign.value();
        if sign == Sign::Positive {
            self.positive_edges += 1;
        }
        debug_assert!(self.degree_sums_balance());
        Ok(())
    }

    pub fn signed_degree(&self, v: Vertex) -> Result<i64> {
        self.check_vertex(v)?;
        Ok(match v {
            Vertex::U(i) => self.u_degrees[i],
            Vertex::V(j) => self.v_degrees[j],
        })
    }

    pub fn u_degrees(&self) -> &[i64] {
        &self.u_degrees
    }

    pub fn v_degrees(&self) -> &[i64] {
        &self.v_degrees
    }

    /// The signed degree sequences `(alpha, beta)` of the two parts, each
    /// sorted non-increasing.
    pub fn signed_degree_sequences(&self) -> Result<(Vec<i64>, Vec<i64>)> {
        if self.p == 0 || self.q == 0 {
            return Err(Error::EmptyPart {
                p: self.p,
                q: self.q,
            });
        }
        let mut alpha = self.u_degrees.clone();
        let mut beta = self.v_degrees.clone();
        alpha.sort_unstable_by(|a, b| b.cmp(a));
        beta.sort_unstable_by(|a, b| b.cmp(a));
        Ok((alpha, beta))
    }

    /// Joins every vertex of `xs` (in U) to every vertex of `ys` (in V) by
    /// a positive edge. Nothing is added if any pair already has an edge.
    pub fn join_all_positive(&mut self, xs: &[usize], ys: &[usize]) -> Result<()> {
        for &u in xs {
            self.check_vertex(Vertex::U(u))?;
        }
        for &v in ys {
            self.check_vertex(Vertex::V(v))?;
        }
        for &u in xs {
            for &v in ys {
                if self.edges.contains_key(&(u, v)) {
                    return Err(Error::EdgeConflict(format!(
                        "{}{}",
                        Vertex::U(u),
                        Vertex::V(v)
                    )));
                }
            }
        }
        for &u in xs {
            for &v in ys {
                self.add_edge(u, v, Sign::Positive)?;
            }
        }
        Ok(())
    }

    /// The same graph with every edge sign reversed.
    pub fn flipped(&self) -> Self {
        let mut g = self.clone();
        for sign in g.edges.values_mut() {
            *sign = -*sign;
        }
        for d in g.u_degrees.iter_mut().chain(g.v_degrees.iter_mut()) {
            *d = -*d;
        }
        g.positive_edges = self.edges.len() - self.positive_edges;
        g
    }

    /// Appends a disjoint copy of `other`. Returns the index offsets of the
    /// copy inside U and V.
    pub fn append(&mut self, other: &SignedBipartiteGraph) -> (usize, usize) {
        let (du, dv) = (self.p, self.q);
        self.p += other.p;
        self.q += other.q;
        self.u_degrees.extend_from_slice(&other.u_degrees);
        self.v_degrees.extend_from_slice(&other.v_degrees);
        self.positive_edges += other.positive_edges;
        self.edges.extend(
            other
                .edges
                .iter()
                .map(|(&(u, v), &s)| ((u + du, v + dv), s)),
        );
        for (vertex, label) in &other.labels {
            let shifted = match *vertex {
                Vertex::U(i) => Vertex::U(i + du),
                Vertex::V(j) => Vertex::V(j + dv),
            };
            self.labels.insert(shifted, label.clone());
        }
        (du, dv)
    }

    pub fn set_label(&mut self, v: Vertex, label: impl Into<String>) -> Result<()> {
        self.check_vertex(v)?;
        self.labels.insert(v, label.into());
        Ok(())
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn labels(&self) -> impl Iterator<Item = (Vertex, &str)> + '_ {
        self.labels.iter().map(|(&v, l)| (v, l.as_str()))
    }

    /// Prefixes every existing block label, e.g. `G1/X_2`.
    pub fn prefix_labels(&mut self, prefix: &str) {
        for label in self.labels.values_mut() {
            *label = format!("{prefix}/{label}");
        }
    }

    pub fn clear_labels(&mut self) {
        self.labels.clear();
    }

    /// Checks the degree identities that hold for every signed bipartite
    /// graph: both parts sum to `#positive - #negative`, and
    /// `|sdeg(u)| <= q`, `|sdeg(v)| <= p`.
    pub fn check_invariants(&self) -> bool {
        self.degree_sums_balance()
            && self
                .u_degrees
                .iter()
                .all(|d| d.unsigned_abs() as usize <= self.q)
            && self
                .v_degrees
                .iter()
                .all(|e| e.unsigned_abs() as usize <= self.p)
    }

    fn degree_sums_balance(&self) -> bool {
        let net = self.positive_edges as i64 - self.negative_edge_count() as i64;
        self.u_degrees.iter().sum::<i64>() == net && self.v_degrees.iter().sum::<i64>() == net
    }
}

impl SignedDegrees for SignedBipartiteGraph {
    fn vertex_count(&self) -> usize {
        self.p + self.q
    }

    fn all_degrees(&self) -> Vec<i64> {
        self.u_degrees
            .iter()
            .chain(self.v_degrees.iter())
            .copied()
            .collect()
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.p + self.q];
        for &(u, v) in self.edges.keys() {
            adj[u].push(self.p + v);
            adj[self.p + v].push(u);
        }
        adj
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zero_square() -> SignedBipartiteGraph {
        let mut g = SignedBipartiteGraph::new(2, 2);
        g.add_edge(0, 0, Sign::Positive).unwrap();
        g.add_edge(1, 1, Sign::Positive).unwrap();
        g.add_edge(0, 1, Sign::Negative).unwrap();
        g.add_edge(1, 0, Sign::Negative).unwrap();
        g
    }

    #[test]
    fn sign_negation_is_involution() {
        for s in [Sign::Positive, Sign::Negative] {
            assert_ne!(-s, s);
            assert_eq!(-(-s), s);
        }
    }

    #[test]
    fn degrees_of_small_graphs() {
        let g = SignedBipartiteGraph::new(1, 1);
        assert_eq!(g.signed_degree(Vertex::U(0)), Ok(0));

        let g = zero_square();
        assert_eq!(g.signed_degree(Vertex::U(0)), Ok(0));
        assert_eq!(g.signed_degree_set().unwrap().to_vec(), vec![0]);
        assert_eq!(
            g.signed_degree_sequences().unwrap(),
            (vec![0, 0], vec![0, 0])
        );
        assert_eq!(
            g.signed_degree(Vertex::V(2)),
            Err(Error::UnknownVertex(Vertex::V(2)))
        );

        let mut g = SignedBipartiteGraph::new(2, 1);
        g.add_edge(0, 0, Sign::Positive).unwrap();
        g.add_edge(1, 0, Sign::Negative).unwrap();
        assert_eq!(g.signed_degree_sequences().unwrap(), (vec![1, -1], vec![0]));
    }

    #[test]
    fn complete_positive_three_by_three() {
        let mut g = SignedBipartiteGraph::new(3, 3);
        g.join_all_positive(&[0, 1, 2], &[0, 1, 2]).unwrap();
        assert_eq!(g.signed_degree_set().unwrap().to_vec(), vec![3]);
        assert!(g.check_invariants());
    }

    #[test]
    fn empty_graph_and_parts_are_errors() {
        let g = SignedBipartiteGraph::new(0, 0);
        assert_eq!(g.signed_degree_set(), Err(Error::EmptyGraph));
        assert_eq!(g.is_connected(), Err(Error::EmptyGraph));
        let g = SignedBipartiteGraph::new(2, 0);
        assert_eq!(
            g.signed_degree_sequences(),
            Err(Error::EmptyPart { p: 2, q: 0 })
        );
    }

    #[test]
    fn connectivity() {
        let mut g = SignedBipartiteGraph::new(1, 1);
        g.add_edge(0, 0, Sign::Positive).unwrap();
        assert_eq!(g.is_connected(), Ok(true));

        let mut g = SignedBipartiteGraph::new(2, 2);
        g.add_edge(0, 0, Sign::Positive).unwrap();
        g.add_edge(1, 1, Sign::Positive).unwrap();
        assert_eq!(g.is_connected(), Ok(false));
        assert_eq!(g.component_count(), 2);

        assert_eq!(zero_square().is_connected(), Ok(true));
    }

    #[test]
    fn duplicate_edge_rejected_regardless_of_sign() {
        let mut g = SignedBipartiteGraph::new(1, 1);
        g.add_edge(0, 0, Sign::Positive).unwrap();
        assert!(matches!(
            g.add_edge(0, 0, Sign::Negative),
            Err(Error::EdgeConflict(_))
        ));
        assert_eq!(g.edge(0, 0), Some(Sign::Positive));
    }

    #[test]
    fn join_all_positive_adds_block_sizes() {
        let mut g = SignedBipartiteGraph::new(1, 2);
        g.join_all_positive(&[0], &[0, 1]).unwrap();
        assert_eq!(g.signed_degree(Vertex::U(0)), Ok(2));
        assert_eq!(g.signed_degree(Vertex::V(1)), Ok(1));

        let before = g.clone();
        g.join_all_positive(&[], &[0, 1]).unwrap();
        g.join_all_positive(&[0], &[]).unwrap();
        assert_eq!(g, before);
    }

    #[test]
    fn join_conflict_leaves_graph_untouched() {
        let mut g = SignedBipartiteGraph::new(2, 2);
        g.add_edge(1, 1, Sign::Negative).unwrap();
        let before = g.clone();
        assert!(matches!(
            g.join_all_positive(&[0, 1], &[0, 1]),
            Err(Error::EdgeConflict(_))
        ));
        assert_eq!(g, before);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn flipping_negates_degrees() {
        let mut g = SignedBipartiteGraph::new(2, 1);
        g.add_edge(0, 0, Sign::Positive).unwrap();
        g.add_edge(1, 0, Sign::Positive).unwrap();
        let f = g.flipped();
        assert_eq!(f.v_degrees(), &[-2]);
        assert_eq!(f.negative_edge_count(), 2);
        assert!(f.check_invariants());
        assert_eq!(f.flipped(), g);
    }

    #[test]
    fn append_shifts_indices_and_labels() {
        let mut a = zero_square();
        a.set_label(Vertex::U(1), "X_1").unwrap();
        let mut b = SignedBipartiteGraph::new(1, 1);
        b.add_edge(0, 0, Sign::Negative).unwrap();
        let (du, dv) = b.append(&a);
        assert_eq!((du, dv), (1, 1));
        assert_eq!(b.p(), 3);
        assert_eq!(b.edge(2, 1), Some(Sign::Negative));
        assert_eq!(b.label(Vertex::U(2)), Some("X_1"));
        assert_eq!(b.component_count(), 2);
        assert!(b.check_invariants());
    }

    #[test]
    fn labels_do_not_affect_equality() {
        let a = zero_square();
        let mut b = zero_square();
        b.set_label(Vertex::V(0), "Y_1").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn general_signed_graph() {
        let mut g = SignedGraph::new(3);
        g.add_edge(0, 1, Sign::Positive).unwrap();
        g.add_edge(2, 1, Sign::Negative).unwrap();
        assert_eq!(g.degree_sequence(), vec![1, 0, -1]);
        assert!(g.add_edge(1, 0, Sign::Negative).is_err());
        assert!(g.add_edge(1, 1, Sign::Negative).is_err());
        assert_eq!(g.edge(1, 2), Some(Sign::Negative));
        assert_eq!(g.is_connected(), Ok(true));
        assert_eq!(SignedGraph::new(1).signed_degree(0), Ok(0));
    }

    #[test]
    fn degree_set_display_and_validation() {
        let s = DegreeSet::new([5, -3, 0, 5]).unwrap();
        assert_eq!(s.to_string(), "{-3, 0, 5}");
        assert_eq!(s.len(), 3);
        assert!(DegreeSet::new([]).is_err());
    }
}
