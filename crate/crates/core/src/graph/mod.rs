//! Simple undirected graphs on dense integer labels, together with the
//! generators, products, prism towers and serialization formats built on top.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub mod census;
pub mod dot;
pub mod generators;
pub mod graph6;
pub mod iso;
pub mod path;
pub mod prism;
pub mod products;

pub use prism::{prism, prism_power, prism_power_with_cap, PrismStructure, PrismTower};
pub use products::{cartesian_product, strong_product};

/// Errors raised while building or decoding graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {1}) is a loop")]
    Loop(usize, usize),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("edge ({0}, {1}) appears more than once")]
    DuplicateEdge(usize, usize),
    #[error("invalid parameter for {family}: {reason}")]
    InvalidParameter { family: &'static str, reason: String },
    #[error("result would have {requested} vertices, above the cap of {cap}")]
    SizeCap { requested: usize, cap: usize },
    #[error("malformed graph6 input at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: &'static str },
    #[error("unknown graph name {0:?}")]
    UnknownName(String),
}

/// An immutable simple undirected graph with vertices `0..n`.
///
/// Neighbor lists are kept sorted, so iteration order is deterministic
/// everywhere in the crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge list. Each edge may be given in either
    /// orientation, but loops and repeated edges are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::Loop(u, v));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted_edges(n, list))
    }

    /// `edges` must be sorted, deduplicated and oriented `u < v`.
    pub(crate) fn from_sorted_edges(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Self { n, adj, edges }
    }

    /// Like [`Graph::new`] but silently drops repeated edges.
    pub(crate) fn from_edges_dedup<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list: Vec<_> = edges
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        list.sort_unstable();
        list.dedup();
        debug_assert!(list.iter().all(|&(u, v)| u != v && v < n));
        Self::from_sorted_edges(n, list)
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted_edges(n, Vec::new())
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// `Some(d)` if every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|a| a.len() == d).then_some(d)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Whether every edge of `self` is an edge of `other` (same labels).
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.edges.iter().all(|&(u, v)| other.has_edge(u, v))
    }

    /// The subgraph induced on `0..k`, keeping labels.
    pub fn induced_prefix(&self, k: usize) -> Graph {
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|&(_, v)| v < k)
            .collect();
        Self::from_sorted_edges(k, edges)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal order");
        Self::from_edges_dedup(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Adjacency rows as bitmasks, available when the graph has at most 64 vertices.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|a| a.iter().fold(0u64, |m, &w| m | (1 << w)))
                .collect(),
        )
    }

    /// Serializes to the `{"n": .., "edges": [[u, v], ..]}` JSON schema.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GraphJson {
            n: self.n,
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = GraphJson::deserialize(deserializer)?;
        Graph::new(raw.n, raw.edges.into_iter().map(|[u, v]| (u, v)))
            .map_err(serde::de::Error::custom)
    }
}
