use std::cmp::Ordering;
use std::collections::BinaryHeap;

use rayon::prelude::*;

use super::{EdgeId, GraphError, WeightedGraph};

/// Path lengths closer than this (relative) are treated as equal, so that
/// geodesics of equal length survive floating-point summation order.
pub(crate) const TIE_TOLERANCE: f64 = 1e-12;

#[inline]
pub(crate) fn lengths_tie(a: f64, b: f64) -> bool {
    (a - b).abs() <= TIE_TOLERANCE * a.abs().max(b.abs()).max(1.0)
}

#[derive(Clone, Copy, PartialEq)]
struct Pending {
    dist: f64,
    vertex: usize,
}

impl Eq for Pending {}

impl Ord for Pending {
    // min-heap on distance, ties broken by smaller vertex id
    fn cmp(&self, other: &Self) -> Ordering {
        other.dist.total_cmp(&self.dist).then_with(|| other.vertex.cmp(&self.vertex))
    }
}

impl PartialOrd for Pending {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Single-source shortest-path structure: distances, geodesic counts and the
/// predecessor DAG, plus the order in which vertices were settled.
#[derive(Debug, Clone)]
pub struct SourceTree {
    pub source: usize,
    pub dist: Vec<f64>,
    /// Number of geodesics from the source, as a real. Exact up to 2^53.
    pub sigma: Vec<f64>,
    /// Vertices in nondecreasing distance from the source.
    pub order: Vec<usize>,
    pred_start: Vec<usize>,
    preds: Vec<(usize, EdgeId)>,
}

impl SourceTree {
    pub fn compute(g: &WeightedGraph, source: usize) -> Result<Self, GraphError> {
        let n = g.vertex_count();
        if source >= n {
            return Err(GraphError::VertexOutOfRange(source));
        }
        let mut dist = vec![f64::INFINITY; n];
        let mut pending_preds: Vec<Vec<(usize, EdgeId)>> = vec![Vec::new(); n];
        let mut settled = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut heap = BinaryHeap::new();
        dist[source] = 0.0;
        heap.push(Pending { dist: 0.0, vertex: source });

        while let Some(Pending { dist: d, vertex: u }) = heap.pop() {
            if settled[u] || d > dist[u] {
                continue;
            }
            settled[u] = true;
            order.push(u);
            for arc in g.arcs(u) {
                let v = arc.to;
                if settled[v] {
                    continue;
                }
                let candidate = d + arc.weight;
                if dist[v].is_finite() && lengths_tie(candidate, dist[v]) {
                    pending_preds[v].push((u, arc.edge));
                } else if candidate < dist[v] {
                    dist[v] = candidate;
                    pending_preds[v].clear();
                    pending_preds[v].push((u, arc.edge));
                    heap.push(Pending { dist: candidate, vertex: v });
                }
            }
        }

        if order.len() < n {
            let unreached = (0..n).find(|&v| !settled[v]).unwrap_or(0);
            return Err(GraphError::DisconnectedGraph { source_vertex: source, unreached });
        }

        let mut pred_start = Vec::with_capacity(n + 1);
        let mut preds = Vec::new();
        for list in &mut pending_preds {
            list.sort_by_key(|&(p, _)| p);
            pred_start.push(preds.len());
            preds.extend_from_slice(list);
        }
        pred_start.push(preds.len());

        let mut sigma = vec![0.0; n];
        sigma[source] = 1.0;
        for &v in order.iter().skip(1) {
            sigma[v] = preds[pred_start[v]..pred_start[v + 1]].iter().map(|&(p, _)| sigma[p]).sum();
        }

        Ok(Self { source, dist, sigma, order, pred_start, preds })
    }

    /// Predecessors of `v` on geodesics from the source, sorted by vertex id.
    pub fn predecessors(&self, v: usize) -> &[(usize, EdgeId)] {
        &self.preds[self.pred_start[v]..self.pred_start[v + 1]]
    }
}

/// All-pairs geodesic data for a connected graph.
#[derive(Debug, Clone)]
pub struct GeodesicData<'g> {
    graph: &'g WeightedGraph,
    trees: Vec<SourceTree>,
}

impl<'g> GeodesicData<'g> {
    pub fn graph(&self) -> &'g WeightedGraph {
        self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.trees.len()
    }

    pub fn tree(&self, source: usize) -> &SourceTree {
        &self.trees[source]
    }

    pub fn trees(&self) -> &[SourceTree] {
        &self.trees
    }

    #[inline]
    pub fn distance(&self, u: usize, v: usize) -> f64 {
        self.trees[u].dist[v]
    }

    #[inline]
    pub fn sigma(&self, u: usize, v: usize) -> f64 {
        self.trees[u].sigma[v]
    }

    /// Predecessors of `target` on geodesics from `source`.
    pub fn predecessors(&self, source: usize, target: usize) -> &[(usize, EdgeId)] {
        self.trees[source].predecessors(target)
    }

    /// Geodesic from `from` to `to` whose vertex sequence is lexicographically
    /// smallest: at each step the smallest-id vertex that stays on a geodesic.
    pub fn lexicographic_geodesic(&self, from: usize, to: usize) -> Vec<usize> {
        // predecessors in the tree rooted at `to` point one step closer to it
        let toward = &self.trees[to];
        let mut path = vec![from];
        let mut cur = from;
        while cur != to {
            cur = toward.predecessors(cur)[0].0;
            path.push(cur);
        }
        path
    }

    /// Counts geodesics by walking the predecessor DAG and compares them with
    /// the stored counts. Returns the largest relative discrepancy.
    pub fn sigma_dag_discrepancy(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for tree in &self.trees {
            let n = tree.dist.len();
            let mut memo: Vec<Option<f64>> = vec![None; n];
            memo[tree.source] = Some(1.0);
            for &v in &tree.order {
                let count = dag_paths(tree, v, &mut memo);
                worst = worst.max((count - tree.sigma[v]).abs() / tree.sigma[v].max(1.0));
            }
        }
        worst
    }
}

fn dag_paths(tree: &SourceTree, v: usize, memo: &mut Vec<Option<f64>>) -> f64 {
    if let Some(c) = memo[v] {
        return c;
    }
    let preds: Vec<usize> = tree.predecessors(v).iter().map(|&(p, _)| p).collect();
    let total = preds.into_iter().map(|p| dag_paths(tree, p, memo)).sum();
    memo[v] = Some(total);
    total
}

/// Exact distances, geodesic counts and predecessor DAGs for every source.
pub fn compute_geodesics(g: &WeightedGraph) -> Result<GeodesicData<'_>, GraphError> {
    if g.vertex_count() == 0 {
        return Err(GraphError::EmptyGraph);
    }
    let trees = (0..g.vertex_count())
        .into_par_iter()
        .map(|s| SourceTree::compute(g, s))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GeodesicData { graph: g, trees })
}
