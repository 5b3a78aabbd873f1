//! Labeled simple undirected graphs and the local operations on them.
//!
//! A [`Graph`] stores one bit-packed adjacency row per vertex, so a local
//! complementation at `v` costs `deg(v)` row XORs of `n/64` words each. All
//! operations are functional: they return a new graph and leave the receiver
//! untouched. [`Graph::local_complement_in_place`] is the mutating kernel used
//! by the sequence folds.
//!
//! Deleted vertices keep their label. Their row and column are empty and any
//! further operation on them is an error.

pub(crate) mod io;
mod orbit;
mod sequence;
mod star;

use std::fmt;

use thiserror::Error;

use crate::gf2::{iter_word_ones, words_for, xor_words, BitVector};

pub use io::{parse_graph, to_dot, write_graph, FormatError};
pub use orbit::{orbit, orbit_with_threads, OrbitError};
pub use sequence::{MixedOp, MixedSequence, VertexSequence};
pub use star::{StarCompleteState, StarShape};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} has been deleted")]
    VertexDeleted(usize),
    #[error("graphs have different vertex counts ({left} vs {right})")]
    VertexCountMismatch { left: usize, right: usize },
    #[error("sequence position {position}: {source}")]
    AtPosition {
        position: usize,
        #[source]
        source: Box<GraphError>,
    },
}

impl GraphError {
    fn at(self, position: usize) -> Self {
        GraphError::AtPosition {
            position,
            source: Box::new(self),
        }
    }
}

/// What [`Graph::query`] asks about a vertex pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QueryMode {
    Adjacent,
    PathConnected,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    stride: usize,
    adj: Vec<u64>,
    deleted: BitVector,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let stride = words_for(n);
        Self {
            n,
            stride,
            adj: vec![0; n * stride],
            deleted: BitVector::zeros(n),
        }
    }

    /// Builds a graph from an edge list. Duplicate and reversed pairs are
    /// merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.check_index(u)?;
            g.check_index(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set_edge(u, v, true);
            }
        }
        g
    }

    /// Star on `n` vertices centered on `center`.
    pub fn star(n: usize, center: usize) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        g.check_index(center)?;
        for v in (0..n).filter(|&v| v != center) {
            g.set_edge(center, v, true);
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_present(&self, v: usize) -> bool {
        v < self.n && !self.deleted.get(v)
    }

    /// Vertices that have not been deleted, ascending.
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(|&v| !self.deleted.get(v))
    }

    /// Edge membership. Out-of-range pairs are simply not edges.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.row(u)[v / 64] >> (v % 64)) & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_word_ones(self.row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// All edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Neighborhood of `v` as a vertex set.
    pub fn neighborhood(&self, v: usize) -> Vec<usize> {
        self.neighbors(v).collect()
    }

    #[inline]
    fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.stride..(v + 1) * self.stride]
    }

    #[inline]
    fn flip_bit(&mut self, u: usize, v: usize) {
        self.adj[u * self.stride + v / 64] ^= 1u64 << (v % 64);
    }

    fn set_edge(&mut self, u: usize, v: usize, on: bool) {
        if self.has_edge(u, v) != on {
            self.flip_bit(u, v);
            self.flip_bit(v, u);
        }
    }

    /// Adds the edge `(u, v)`; no-op if already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_present(u)?;
        self.check_present(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.set_edge(u, v, true);
        Ok(())
    }

    fn check_index(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    fn check_present(&self, v: usize) -> Result<(), GraphError> {
        self.check_index(v)?;
        if self.deleted.get(v) {
            Err(GraphError::VertexDeleted(v))
        } else {
            Ok(())
        }
    }

    /// Symmetric, loop-free, and deleted vertices isolated.
    pub fn is_well_formed(&self) -> bool {
        (0..self.n).all(|u| {
            !self.has_edge(u, u)
                && (!self.deleted.get(u) || self.degree(u) == 0)
                && self.neighbors(u).all(|v| v < self.n && self.has_edge(v, u))
        }) && self.adj.len() == self.n * self.stride
            && self.row_padding_is_clear()
    }

    fn row_padding_is_clear(&self) -> bool {
        let tail = self.n % 64;
        tail == 0 || (0..self.n).all(|u| self.row(u)[self.stride - 1] >> tail == 0)
    }

    /// Toggles `(u, u')` for every pair of distinct neighbors of `v`.
    pub fn local_complement_in_place(&mut self, v: usize) -> Result<(), GraphError> {
        self.check_present(v)?;
        let stride = self.stride;
        for wi in 0..stride {
            let mut word = self.adj[v * stride + wi];
            while word != 0 {
                let u = wi * 64 + word.trailing_zeros() as usize;
                word &= word - 1;
                // u != v since the diagonal is clear, so the two rows are disjoint.
                let (src, dst) = if u < v {
                    let (lo, hi) = self.adj.split_at_mut(v * stride);
                    (&hi[..stride], &mut lo[u * stride..(u + 1) * stride])
                } else {
                    let (lo, hi) = self.adj.split_at_mut(u * stride);
                    (&lo[v * stride..(v + 1) * stride], &mut hi[..stride])
                };
                xor_words(dst, src);
                // u is in N(v), so the XOR just set the diagonal bit.
                dst[u / 64] ^= 1u64 << (u % 64);
            }
        }
        Ok(())
    }

    /// `G * v`.
    pub fn local_complement(&self, v: usize) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.local_complement_in_place(v)?;
        Ok(g)
    }

    /// `G * s`, the left fold of [`Graph::local_complement`] over `s`.
    pub fn apply_sequence(&self, seq: &[usize]) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for (position, &v) in seq.iter().enumerate() {
            g.local_complement_in_place(v).map_err(|e| e.at(position))?;
        }
        Ok(g)
    }

    /// Removes `v` and its edges. The label `v` stays reserved.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.delete_vertex_in_place(v)?;
        Ok(g)
    }

    fn delete_vertex_in_place(&mut self, v: usize) -> Result<(), GraphError> {
        self.check_present(v)?;
        for u in self.neighborhood(v) {
            self.flip_bit(u, v);
        }
        self.adj[v * self.stride..(v + 1) * self.stride].fill(0);
        self.deleted.set(v, true);
        Ok(())
    }

    /// Complements the subgraph induced by `set`.
    pub fn subgraph_complement(&self, set: &[usize]) -> Result<Graph, GraphError> {
        let mut mask = vec![0u64; self.stride];
        for &v in set {
            self.check_present(v)?;
            mask[v / 64] |= 1u64 << (v % 64);
        }
        let mut g = self.clone();
        for u in iter_word_ones(&mask).collect::<Vec<_>>() {
            let stride = g.stride;
            xor_words(&mut g.adj[u * stride..(u + 1) * stride], &mask);
            g.flip_bit(u, u);
        }
        Ok(g)
    }

    /// Left fold of local complementations and deletions.
    pub fn apply_mixed_sequence(&self, seq: &MixedSequence) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for (position, &(v, op)) in seq.iter().enumerate() {
            let step = match op {
                MixedOp::Complement => g.local_complement_in_place(v),
                MixedOp::Delete => g.delete_vertex_in_place(v),
            };
            step.map_err(|e| e.at(position))?;
        }
        Ok(g)
    }

    pub fn query(&self, u: usize, v: usize, mode: QueryMode) -> Result<bool, GraphError> {
        self.check_present(u)?;
        self.check_present(v)?;
        Ok(match mode {
            QueryMode::Adjacent => self.has_edge(u, v),
            QueryMode::PathConnected => self.connected(u, v),
        })
    }

    fn connected(&self, from: usize, to: usize) -> bool {
        if from == to {
            return true;
        }
        let mut seen = vec![0u64; self.stride];
        seen[from / 64] |= 1 << (from % 64);
        let mut stack = vec![from];
        while let Some(u) = stack.pop() {
            for (wi, (&nb, s)) in self.row(u).iter().zip(seen.iter_mut()).enumerate() {
                let mut fresh = nb & !*s;
                *s |= fresh;
                while fresh != 0 {
                    let w = wi * 64 + fresh.trailing_zeros() as usize;
                    fresh &= fresh - 1;
                    if w == to {
                        return true;
                    }
                    stack.push(w);
                }
            }
        }
        false
    }

    /// Connected components as ascending vertex lists, ordered by their
    /// smallest vertex. Deleted vertices are singletons.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[start] = id;
            let mut members = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for w in self.neighbors(u) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Subgraph induced by `vertices`, relabeled `0..k` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        for &v in vertices {
            self.check_index(v)?;
        }
        let mut g = Graph::empty(vertices.len());
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if u == v {
                    return Err(GraphError::SelfLoop(u));
                }
                if self.has_edge(u, v) {
                    g.set_edge(a, b, true);
                }
            }
        }
        Ok(g)
    }

    /// Disjoint union: the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.set_edge(u, v, true);
        }
        for (u, v) in other.edges() {
            g.set_edge(u + self.n, v + self.n, true);
        }
        for v in 0..self.n {
            if self.deleted.get(v) {
                g.deleted.set(v, true);
            }
        }
        for v in 0..other.n {
            if other.deleted.get(v) {
                g.deleted.set(v + self.n, true);
            }
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?}", self.n, self.edges())?;
        let deleted: Vec<usize> = self.deleted.iter_ones().collect();
        if !deleted.is_empty() {
            write!(f, ", deleted={deleted:?}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    // Direct transcription of the two-condition definition: u ~ u' in G*v iff
    // exactly one of (u,u') ∈ E, or both (u,v),(u',v) ∈ E.
    fn naive_lc(graph: &Graph, v: usize) -> Graph {
        let n = graph.n();
        let mut edges = Vec::new();
        for u in 0..n {
            for w in u + 1..n {
                let direct = graph.has_edge(u, w);
                let via = u != v && w != v && graph.has_edge(u, v) && graph.has_edge(w, v);
                if direct ^ via {
                    edges.push((u, w));
                }
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn build_examples() {
        let empty = g(0, &[]);
        assert_eq!(empty.n(), 0);
        assert_eq!(empty.edge_count(), 0);

        let copy = g(4, &[(0, 2), (1, 3)]);
        assert_eq!(copy.edges(), vec![(0, 2), (1, 3)]);
        assert!(copy.has_edge(2, 0));

        assert_eq!(
            Graph::from_edges(2, &[(0, 0)]),
            Err(GraphError::SelfLoop(0))
        );
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn local_complement_examples() {
        let p = g(4, &[(0, 1), (1, 2)]);
        assert_eq!(p.local_complement(3).unwrap(), p);

        assert_eq!(
            Graph::complete(5).local_complement(1).unwrap(),
            Graph::star(5, 1).unwrap()
        );

        assert_eq!(
            Graph::complete(3).local_complement(0).unwrap().edges(),
            vec![(0, 1), (0, 2)]
        );
        assert!(Graph::complete(3).local_complement(3).is_err());
    }

    #[test]
    fn apply_sequence_examples() {
        let base = g(5, &[(0, 1), (2, 3), (3, 4)]);
        assert_eq!(base.apply_sequence(&[]).unwrap(), base);
        assert_eq!(base.apply_sequence(&[3, 3]).unwrap(), base);

        let copy_true = g(4, &[(0, 2), (1, 3), (0, 1)]);
        assert!(copy_true.apply_sequence(&[0, 1, 0]).unwrap().has_edge(2, 3));

        let err = base.apply_sequence(&[0, 9]).unwrap_err();
        assert!(matches!(err, GraphError::AtPosition { position: 1, .. }));
    }

    #[test]
    fn delete_examples() {
        let star = Graph::star(5, 2).unwrap();
        let d = star.delete_vertex(2).unwrap();
        assert_eq!(d.edge_count(), 0);
        assert!(!d.is_present(2));
        assert!(d.is_well_formed());

        let p = g(4, &[(0, 1), (1, 2)]);
        assert_eq!(p.delete_vertex(3).unwrap().edges(), p.edges());

        let k3 = Graph::complete(3).delete_vertex(0).unwrap();
        assert_eq!(k3.edges(), vec![(1, 2)]);
        assert_eq!(k3.delete_vertex(0), Err(GraphError::VertexDeleted(0)));
        assert_eq!(k3.local_complement(0), Err(GraphError::VertexDeleted(0)));
    }

    #[test]
    fn subgraph_complement_examples() {
        let p = g(4, &[(0, 1), (1, 2)]);
        assert_eq!(p.subgraph_complement(&[]).unwrap(), p);
        assert_eq!(p.subgraph_complement(&[2]).unwrap(), p);
        assert_eq!(
            Graph::complete(3).subgraph_complement(&[0, 1, 2]).unwrap(),
            Graph::empty(3)
        );
        assert!(p.subgraph_complement(&[4]).is_err());
    }

    #[test]
    fn mixed_sequence_examples() {
        let k3 = Graph::complete(3);
        let seq = MixedSequence::new(vec![(0, MixedOp::Complement), (0, MixedOp::Delete)]).unwrap();
        let out = k3.apply_mixed_sequence(&seq).unwrap();
        assert_eq!(out.edge_count(), 0);

        let all_lc =
            MixedSequence::new(vec![(0, MixedOp::Complement), (1, MixedOp::Complement)]).unwrap();
        assert_eq!(
            k3.apply_mixed_sequence(&all_lc).unwrap(),
            k3.apply_sequence(&[0, 1]).unwrap()
        );

        assert!(MixedSequence::new(vec![(1, MixedOp::Delete), (1, MixedOp::Complement)]).is_err());
        // The graph-side check fires even when the sequence type is bypassed.
        let raw = MixedSequence::unchecked(vec![(1, MixedOp::Delete), (1, MixedOp::Complement)]);
        let err = k3.apply_mixed_sequence(&raw).unwrap_err();
        assert_eq!(
            err,
            GraphError::AtPosition {
                position: 1,
                source: Box::new(GraphError::VertexDeleted(1))
            }
        );
    }

    #[test]
    fn query_examples() {
        let k2 = Graph::complete(2);
        assert!(k2.query(0, 1, QueryMode::Adjacent).unwrap());

        let two = g(4, &[(0, 1), (2, 3)]);
        assert!(!two.query(0, 3, QueryMode::PathConnected).unwrap());
        assert!(two.query(2, 3, QueryMode::PathConnected).unwrap());

        let p3 = g(3, &[(0, 1), (1, 2)]);
        assert!(p3.query(0, 2, QueryMode::PathConnected).unwrap());
        assert!(!p3.query(0, 2, QueryMode::Adjacent).unwrap());

        let cut = p3.delete_vertex(1).unwrap();
        assert!(!cut.query(0, 2, QueryMode::PathConnected).unwrap());
        assert!(cut.query(0, 1, QueryMode::Adjacent).is_err());
    }

    #[test]
    fn components_and_induced() {
        let g = g(6, &[(0, 3), (3, 5), (1, 4)]);
        assert_eq!(g.components(), vec![vec![0, 3, 5], vec![1, 4], vec![2]]);
        let sub = g.induced_subgraph(&[5, 3, 0]).unwrap();
        assert_eq!(sub.edges(), vec![(0, 1), (1, 2)]);
        assert!(g.induced_subgraph(&[1, 1]).is_err());
        assert!(Graph::empty(0).components().is_empty());
    }

    #[test]
    fn tiny_graphs_are_fixed_points() {
        for n in 0..2 {
            let e = Graph::empty(n);
            assert_eq!(
                e.subgraph_complement(&(0..n).collect::<Vec<_>>()).unwrap(),
                e
            );
            if n == 1 {
                assert_eq!(e.local_complement(0).unwrap(), e);
            }
        }
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
                move |bits| {
                    let mut edges = Vec::new();
                    let mut k = 0;
                    for u in 0..n {
                        for v in u + 1..n {
                            if bits[k] {
                                edges.push((u, v));
                            }
                            k += 1;
                        }
                    }
                    Graph::from_edges(n, &edges).unwrap()
                },
            )
        })
    }

    fn arb_graph_vertex(max_n: usize) -> impl Strategy<Value = (Graph, usize)> {
        arb_graph(max_n)
            .prop_filter("needs a vertex", |g| g.n() > 0)
            .prop_flat_map(|g| {
                let n = g.n();
                (Just(g), 0..n)
            })
    }

    proptest! {
        #[test]
        fn matches_definition((graph, v) in arb_graph_vertex(70)) {
            let fast = graph.local_complement(v).unwrap();
            prop_assert!(fast.is_well_formed());
            prop_assert_eq!(fast, naive_lc(&graph, v));
        }

        #[test]
        fn involution((graph, v) in arb_graph_vertex(130)) {
            let twice = graph.local_complement(v).unwrap().local_complement(v).unwrap();
            prop_assert_eq!(twice, graph);
        }

        #[test]
        fn equals_neighborhood_complement((graph, v) in arb_graph_vertex(100)) {
            let via_set = graph.subgraph_complement(&graph.neighborhood(v)).unwrap();
            prop_assert_eq!(graph.local_complement(v).unwrap(), via_set);
        }

        #[test]
        fn sequence_concatenation(
            (graph, s1, s2) in arb_graph(40)
                .prop_filter("needs a vertex", |g| g.n() > 0)
                .prop_flat_map(|g| {
                    let n = g.n();
                    (
                        Just(g),
                        proptest::collection::vec(0..n, 0..20),
                        proptest::collection::vec(0..n, 0..20),
                    )
                })
        ) {
            let joined: Vec<usize> = s1.iter().chain(&s2).copied().collect();
            let stepwise = graph.apply_sequence(&s1).unwrap().apply_sequence(&s2).unwrap();
            prop_assert_eq!(graph.apply_sequence(&joined).unwrap(), stepwise);
        }

        #[test]
        fn every_operation_keeps_the_graph_simple(
            (graph, v) in arb_graph_vertex(80),
            set in proptest::collection::vec(0usize..80, 0..12),
        ) {
            let set: Vec<usize> = set.into_iter().filter(|&x| x < graph.n()).collect();
            prop_assert!(graph.local_complement(v).unwrap().is_well_formed());
            prop_assert!(graph.delete_vertex(v).unwrap().is_well_formed());
            prop_assert!(graph.subgraph_complement(&set).unwrap().is_well_formed());
        }
    }
}
