//! Edge and vertex traffic rates, betweenness and subgraph loads.
//!
//! Routing splits the demand of every ordered pair `(s, t)` uniformly over
//! the `sigma(s, t)` geodesics, so the rate on an edge is the demand-weighted
//! fractional edge betweenness. Everything is accumulated per source over the
//! predecessor DAG in reverse distance order.

use std::borrow::Cow;

use rayon::prelude::*;
use serde::Serialize;

use super::{Demand, EdgeId, GeodesicData, GraphError, SourceTree, WeightedGraph};

/// Sources per reduction block. Partial sums are formed block by block and
/// added in block order, so results do not depend on the thread count.
const SOURCE_BLOCK: usize = 32;

/// Per-edge and per-vertex traffic under a given demand.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrafficReport {
    pub vertex_count: usize,
    /// `tau(e)`, indexed by [`EdgeId`].
    pub edge_rate: Vec<f64>,
    /// Betweenness `beta_c(v)`, endpoints included.
    pub betweenness: Vec<f64>,
    /// Vertex traffic `tau(v)`: sum of `tau(e)` over incident edges.
    pub vertex_rate: Vec<f64>,
}

impl TrafficReport {
    /// Largest `|tau(v) - (2 beta_c(v) - out(v) - in(v))|`, relative to `beta_c(v)`.
    /// Under uniform demand `out(v) = in(v) = N - 1`.
    pub fn identity_residual(&self, dem: &Demand) -> (usize, f64) {
        let n = self.vertex_count;
        (0..n)
            .map(|v| {
                let expected = 2.0 * self.betweenness[v] - dem.row_sum(v, n) - dem.column_sum(v, n);
                let r = (self.vertex_rate[v] - expected).abs() / self.betweenness[v].abs().max(1.0);
                (v, r)
            })
            .fold((0, 0.0), |best, cur| if cur.1 > best.1 { cur } else { best })
    }

    pub fn max_vertex_rate(&self) -> f64 {
        self.vertex_rate.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn max_betweenness(&self) -> f64 {
        self.betweenness.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }
}

struct Accumulator {
    edge: Vec<f64>,
    vertex: Vec<f64>,
}

impl Accumulator {
    fn new(n: usize, m: usize) -> Self {
        Self { edge: vec![0.0; m], vertex: vec![0.0; n] }
    }

    fn merge(&mut self, other: &Accumulator) {
        for (a, b) in self.edge.iter_mut().zip(&other.edge) {
            *a += b;
        }
        for (a, b) in self.vertex.iter_mut().zip(&other.vertex) {
            *a += b;
        }
    }

    /// Adds the contribution of every pair `(tree.source, t)`.
    fn add_source(&mut self, tree: &SourceTree, dem: &Demand, flow: &mut [f64]) {
        let s = tree.source;
        let n = flow.len();
        for (t, f) in flow.iter_mut().enumerate() {
            *f = dem.get(s, t);
        }
        // flow[v]: demand from s routed through v, including demand ending at v
        for &v in tree.order.iter().rev() {
            if v == s {
                continue;
            }
            let through = flow[v];
            if through == 0.0 {
                continue;
            }
            self.vertex[v] += through;
            let per_path = through / tree.sigma[v];
            for &(p, e) in tree.predecessors(v) {
                let share = per_path * tree.sigma[p];
                self.edge[e.0] += share;
                if p != s {
                    flow[p] += share;
                }
            }
        }
        self.vertex[s] += dem.row_sum(s, n);
    }
}

fn finish(g: &WeightedGraph, acc: Accumulator) -> TrafficReport {
    let n = g.vertex_count();
    let mut vertex_rate = vec![0.0; n];
    for (e, &rate) in g.edges().iter().zip(&acc.edge) {
        vertex_rate[e.u] += rate;
        vertex_rate[e.v] += rate;
    }
    TrafficReport { vertex_count: n, edge_rate: acc.edge, betweenness: acc.vertex, vertex_rate }
}

fn reduce_blocks<'t, F>(g: &WeightedGraph, dem: &Demand, tree_for: F) -> Result<Accumulator, GraphError>
where
    F: Fn(usize) -> Result<Cow<'t, SourceTree>, GraphError> + Sync,
{
    let n = g.vertex_count();
    let m = g.edge_count();
    let blocks: Vec<usize> = (0..n).step_by(SOURCE_BLOCK).collect();
    let partials = blocks
        .par_iter()
        .map(|&start| {
            let mut acc = Accumulator::new(n, m);
            let mut flow = vec![0.0; n];
            for s in start..(start + SOURCE_BLOCK).min(n) {
                let tree = tree_for(s)?;
                acc.add_source(&tree, dem, &mut flow);
            }
            Ok(acc)
        })
        .collect::<Result<Vec<_>, GraphError>>()?;
    let mut total = Accumulator::new(n, m);
    for p in &partials {
        total.merge(p);
    }
    Ok(total)
}

/// `tau(e)` for every edge, indexed by [`EdgeId`].
pub fn edge_traffic(gd: &GeodesicData<'_>, dem: &Demand) -> Result<Vec<f64>, GraphError> {
    Ok(vertex_traffic(gd, dem)?.edge_rate)
}

/// Full traffic report over stored geodesic data. Under uniform demand the
/// identity `tau(v) = 2 beta_c(v) - 2(N - 1)` is checked to 1e-9 (relative to
/// `beta_c(v)`).
pub fn vertex_traffic(gd: &GeodesicData<'_>, dem: &Demand) -> Result<TrafficReport, GraphError> {
    let g = gd.graph();
    dem.check(g.vertex_count())?;
    let acc = reduce_blocks(g, dem, |s| Ok(Cow::Borrowed(gd.tree(s))))?;
    checked(finish(g, acc), dem)
}

/// Same report as [`vertex_traffic`], recomputing each source tree on the fly
/// instead of holding all-pairs data in memory.
pub fn traffic_streaming(g: &WeightedGraph, dem: &Demand) -> Result<TrafficReport, GraphError> {
    if g.vertex_count() == 0 {
        return Err(GraphError::EmptyGraph);
    }
    dem.check(g.vertex_count())?;
    let acc = reduce_blocks(g, dem, |s| SourceTree::compute(g, s).map(Cow::Owned))?;
    checked(finish(g, acc), dem)
}

/// `max_v beta_c(v)` under uniform demand, without materializing all pairs.
pub fn max_betweenness(g: &WeightedGraph) -> Result<f64, GraphError> {
    Ok(traffic_streaming(g, &Demand::Uniform)?.max_betweenness())
}

fn checked(report: TrafficReport, dem: &Demand) -> Result<TrafficReport, GraphError> {
    if dem.is_uniform() {
        let (vertex, residual) = report.identity_residual(dem);
        if residual > 1e-9 {
            return Err(GraphError::IdentityViolated { vertex, residual });
        }
    }
    Ok(report)
}

/// `Lambda_t(X) = sum over e in X of l(e) tau(e)`, with `X` given as vertex pairs.
pub fn subgraph_load(gd: &GeodesicData<'_>, dem: &Demand, edges: &[(usize, usize)]) -> Result<f64, GraphError> {
    let g = gd.graph();
    let ids = edges
        .iter()
        .map(|&(u, v)| g.find_edge(u, v).ok_or(GraphError::UnknownEdge(u, v)))
        .collect::<Result<Vec<_>, _>>()?;
    let rates = edge_traffic(gd, dem)?;
    Ok(load_of(g, &rates, &ids))
}

pub(crate) fn load_of(g: &WeightedGraph, rates: &[f64], ids: &[EdgeId]) -> f64 {
    ids.iter().map(|&e| g.edge(e).weight * rates[e.0]).sum()
}

/// Edges incident to a vertex and their total length.
#[derive(Debug, Clone, PartialEq)]
pub struct Star {
    pub center: usize,
    pub edges: Vec<EdgeId>,
    pub length: f64,
}

impl Star {
    pub fn endpoints(&self, g: &WeightedGraph) -> Vec<(usize, usize)> {
        self.edges.iter().map(|&e| (g.edge(e).u, g.edge(e).v)).collect()
    }
}

pub fn star(g: &WeightedGraph, v: usize) -> Result<Star, GraphError> {
    if v >= g.vertex_count() {
        return Err(GraphError::UnknownVertex(v));
    }
    let edges: Vec<EdgeId> = g.neighbors(v).map(|(_, e, _)| e).collect();
    let length = edges.iter().map(|&e| g.edge(e).weight).sum();
    Ok(Star { center: v, edges, length })
}
