//! Weighted undirected graphs, shortest-path structure, and the discrete
//! traffic metrics built on top of it.

mod demand;
mod geodesics;
pub mod io;
mod traffic;

pub use demand::Demand;
pub use geodesics::{compute_geodesics, GeodesicData, SourceTree};
pub use traffic::{
    edge_traffic, max_betweenness, star, subgraph_load, traffic_streaming, vertex_traffic, Star,
    TrafficReport,
};

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Errors raised while building graphs or computing metrics on them.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has non-positive or non-finite weight {w}")]
    NonPositiveWeight { u: u64, v: u64, w: f64 },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: u64, v: u64 },
    #[error("self-loop at vertex {0}")]
    SelfLoop(u64),
    #[error("vertex index {0} out of range")]
    VertexOutOfRange(usize),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is disconnected: vertex {unreached} unreachable from {source_vertex}")]
    DisconnectedGraph { source_vertex: usize, unreached: usize },
    #[error("demand is defined on {demand} vertices but the graph has {graph}")]
    DemandShapeMismatch { demand: usize, graph: usize },
    #[error("demand entry ({s}, {t}) is negative or non-finite: {value}")]
    InvalidDemand { s: usize, t: usize, value: f64 },
    #[error("edge ({0}, {1}) is not in the graph")]
    UnknownEdge(usize, usize),
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(usize),
    #[error("geodesic enumeration exceeded the limit of {0} paths")]
    EnumerationLimit(usize),
    #[error("traffic identity violated at vertex {vertex}: residual {residual}")]
    IdentityViolated { vertex: usize, residual: f64 },
}

/// Index into the canonical edge list of a [`WeightedGraph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An undirected edge between internal vertex indices, `u < v`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: f64,
}

impl Edge {
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Arc {
    pub to: usize,
    pub edge: EdgeId,
    pub weight: f64,
}

/// Undirected graph with strictly positive edge lengths.
///
/// Vertices are stored as dense indices `0..N`; each carries the label it
/// had in the input. Edges are kept in canonical order, sorted by
/// `(min endpoint, max endpoint)`, and [`EdgeId`]s index into that order.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    labels: Vec<u64>,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<Arc>>,
}

impl WeightedGraph {
    /// Builds a graph from labelled edges. Labels are sorted and renumbered
    /// densely, so a graph whose labels are already `0..N` keeps them.
    pub fn from_labeled_edges(edges: &[(u64, u64, f64)]) -> Result<Self, GraphError> {
        let mut index: BTreeMap<u64, usize> = BTreeMap::new();
        for &(u, v, _) in edges {
            index.insert(u, 0);
            index.insert(v, 0);
        }
        for (i, slot) in index.values_mut().enumerate() {
            *slot = i;
        }
        let labels: Vec<u64> = index.keys().copied().collect();
        let dense: Vec<(usize, usize, f64)> =
            edges.iter().map(|&(u, v, w)| (index[&u], index[&v], w)).collect();
        Self::assemble(labels, &dense)
    }

    /// Builds a graph on vertices `0..n` (isolated vertices allowed).
    pub fn with_vertices(n: usize, edges: &[(usize, usize, f64)]) -> Result<Self, GraphError> {
        if let Some(&(u, v, _)) = edges.iter().find(|&&(u, v, _)| u >= n || v >= n) {
            return Err(GraphError::VertexOutOfRange(u.max(v)));
        }
        Self::assemble((0..n as u64).collect(), edges)
    }

    fn assemble(labels: Vec<u64>, edges: &[(usize, usize, f64)]) -> Result<Self, GraphError> {
        let n = labels.len();
        let mut canon: BTreeMap<(usize, usize), f64> = BTreeMap::new();
        for &(u, v, w) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(labels[u]));
            }
            if !(w.is_finite() && w > 0.0) {
                return Err(GraphError::NonPositiveWeight { u: labels[u], v: labels[v], w });
            }
            let key = (u.min(v), u.max(v));
            if canon.insert(key, w).is_some() {
                return Err(GraphError::DuplicateEdge { u: labels[key.0], v: labels[key.1] });
            }
        }
        let edges: Vec<Edge> = canon.into_iter().map(|((u, v), weight)| Edge { u, v, weight }).collect();
        let mut adjacency = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            adjacency[e.u].push(Arc { to: e.v, edge: EdgeId(i), weight: e.weight });
            adjacency[e.v].push(Arc { to: e.u, edge: EdgeId(i), weight: e.weight });
        }
        for arcs in &mut adjacency {
            arcs.sort_by_key(|a| a.to);
        }
        Ok(Self { labels, edges, adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id.0]
    }

    pub fn label(&self, v: usize) -> u64 {
        self.labels[v]
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    /// Internal index of the vertex carrying `label`.
    pub fn index_of(&self, label: u64) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Neighbours of `v` in increasing index order, with the connecting edge.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, EdgeId, f64)> + '_ {
        self.adjacency[v].iter().map(|a| (a.to, a.edge, a.weight))
    }

    pub(crate) fn arcs(&self, v: usize) -> &[Arc] {
        &self.adjacency[v]
    }

    pub fn find_edge(&self, u: usize, v: usize) -> Option<EdgeId> {
        let arcs = self.adjacency.get(u)?;
        arcs.binary_search_by_key(&v, |a| a.to).ok().map(|i| arcs[i].edge)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for a in &self.adjacency[u] {
                if !seen[a.to] {
                    seen[a.to] = true;
                    count += 1;
                    stack.push(a.to);
                }
            }
        }
        count == n
    }

    /// Edge list as `(label u, label v, weight)` in canonical order.
    pub fn labeled_edges(&self) -> Vec<(u64, u64, f64)> {
        self.edges.iter().map(|e| (self.labels[e.u], self.labels[e.v], e.weight)).collect()
    }
}

/// Builds a graph from labelled `(u, v, w)` triples.
pub fn build_graph(edges: &[(u64, u64, f64)]) -> Result<WeightedGraph, GraphError> {
    WeightedGraph::from_labeled_edges(edges)
}
