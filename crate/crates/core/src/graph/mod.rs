//! Simple undirected graphs on vertices `0..n-1`, with exact clique and
//! independence routines, text codecs and uniform hypergraphs.

mod clique;
mod codec;
mod hypergraph;

pub use clique::{
    clique_number, find_clique, find_clique_within, independence_number, max_clique,
    maximum_independent_set,
};
pub use codec::{
    decode_edge_list, decode_graph6, encode_edge_list, encode_graph6, parse_graph_text,
};
pub use hypergraph::{Girth, Hypergraph};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use std::fmt;

/// An unordered vertex pair, always stored with `.0 < .1`.
pub type Edge = (usize, usize);

/// Normalizes a pair so the smaller label comes first.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Finite simple undirected graph with vertex labels `0..n-1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            adj: vec![VertexSet::new(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Cycle `0-1-..-(n-1)-0`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Self::path(n);
        g.add_edge(n - 1, 0);
        g
    }

    /// Path `0-1-..-(n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// Petersen graph: outer cycle `0..5`, inner pentagram `5..10`, spokes `i ~ i+5`.
    pub fn petersen() -> Self {
        let mut g = Self::empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
            g.add_edge(i, i + 5);
        }
        g
    }

    /// Builds a graph from an edge list, rejecting loops and out-of-range labels.
    /// Repeated edges are merged.
    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from neighbourhood bitsets. Panics when the rows are not
    /// symmetric or contain loops.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        let n = adj.len();
        for (u, row) in adj.iter().enumerate() {
            assert_eq!(row.capacity(), n);
            assert!(!row.contains(u), "self-loop at {u}");
            for v in row {
                assert!(adj[v].contains(u), "asymmetric adjacency at ({u},{v})");
            }
        }
        Self { n, adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub(crate) fn delete_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// δ(G); `None` for the graph with no vertices.
    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges in canonical order: sorted pairs, lexicographic.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn complement(&self) -> Self {
        let full = VertexSet::full(self.n);
        let adj = (0..self.n)
            .map(|v| {
                let mut row = full.difference(&self.adj[v]);
                row.remove(v);
                row
            })
            .collect();
        Self { n: self.n, adj }
    }

    /// Copy of the graph with one edge removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Self {
        let mut g = self.clone();
        g.delete_edge(u, v);
        g
    }

    /// Copy of the graph with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        if u == v || u >= self.n || v >= self.n {
            return Err(Error::input(format!("cannot add edge ({u},{v})")));
        }
        let mut g = self.clone();
        g.add_edge(u, v);
        Ok(g)
    }

    /// `g[s]`, relabelled `0..|s|-1` in increasing order of original label.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<Self> {
        if let Some(&bad) = s.iter().find(|&&v| v >= self.n) {
            return Err(Error::input(format!(
                "vertex {bad} out of range for {} vertices",
                self.n
            )));
        }
        let members = VertexSet::from_members(self.n, s.iter().copied());
        Ok(self.induced_on(&members))
    }

    /// Induced subgraph on a bitset (members are in range by construction).
    pub fn induced_on(&self, s: &VertexSet) -> Self {
        let order: Vec<usize> = s.to_vec();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Self::empty(order.len());
        for (i, &v) in order.iter().enumerate() {
            for w in self.adj[v].intersection(s).iter().filter(|&w| w > v) {
                g.add_edge(i, pos[w]);
            }
        }
        g
    }

    /// `g - v`: removes vertex `v` and relabels the rest in order.
    pub fn without_vertex(&self, v: usize) -> Self {
        let mut keep = VertexSet::full(self.n);
        keep.remove(v);
        self.induced_on(&keep)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let mut g = Self::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut g = Self::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Whether every edge of `self` is an edge of `other` (same labels).
    pub fn is_labelled_subgraph_of(&self, other: &Self) -> bool {
        self.n <= other.n && self.edges().into_iter().all(|(u, v)| other.has_edge(u, v))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&encode_graph6(self))
    }
}

impl<'de> serde::Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        decode_graph6(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn serde_uses_graph6() {
        let json = serde_json::to_string(&Graph::complete(3)).unwrap();
        assert_eq!(json, "\"Bw\"");
        assert_eq!(
            serde_json::from_str::<Graph>(&json).unwrap(),
            Graph::complete(3)
        );
        assert!(serde_json::from_str::<Graph>("\"B\"").is_err());
    }

    #[test]
    fn named_graphs_have_expected_sizes() {
        assert_eq!(Graph::complete(6).edge_count(), 15);
        assert_eq!(Graph::cycle(5).edge_count(), 5);
        let p = Graph::petersen();
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
    }

    #[test]
    fn from_edges_rejects_loops_and_range() {
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        let g = Graph::from_edges(3, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn induced_subgraph_examples() {
        let k3 = Graph::complete(4).induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(k3, Graph::complete(3));
        let pair = Graph::cycle(5).induced_subgraph(&[0, 2]).unwrap();
        assert_eq!(pair, Graph::empty(2));
        let outer = Graph::petersen()
            .induced_subgraph(&[0, 1, 2, 3, 4])
            .unwrap();
        assert_eq!(outer, Graph::cycle(5));
        assert!(Graph::cycle(5).induced_subgraph(&[0, 5]).is_err());
    }

    #[test]
    fn complement_of_cycle5_is_cycle5_shape() {
        let c = Graph::cycle(5).complement();
        assert_eq!(c.edge_count(), 5);
        assert!((0..5).all(|v| c.degree(v) == 2));
        assert_eq!(c.complement(), Graph::cycle(5));
    }

    #[test]
    fn without_vertex_relabels() {
        let g = Graph::path(4).without_vertex(1);
        assert_eq!(g.edges(), vec![(1, 2)]);
    }
}
