//! Shared helpers for the integration tests: random graphs and a brute-force
//! traffic oracle that enumerates every geodesic explicitly.

#![allow(dead_code, clippy::needless_range_loop)]

use congestion::graph::{build_graph, Demand, WeightedGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Connected graph on `n` vertices: a random spanning tree plus up to
/// `extra` further edges, weights uniform in `[lo, hi]`.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, extra: usize, lo: f64, hi: f64) -> WeightedGraph {
    let mut edges: Vec<(u64, u64, f64)> = Vec::new();
    let mut present = vec![vec![false; n]; n];
    for v in 1..n {
        let u = rng.random_range(0..v);
        present[u][v] = true;
        edges.push((u as u64, v as u64, rng.random_range(lo..=hi)));
    }
    for _ in 0..extra {
        let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
        let (u, v) = (u.min(v), u.max(v));
        if u != v && !present[u][v] {
            present[u][v] = true;
            edges.push((u as u64, v as u64, rng.random_range(lo..=hi)));
        }
    }
    if n == 1 {
        edges.clear();
    }
    build_graph(&edges).expect("valid random graph")
}

pub fn random_demand(rng: &mut ChaCha8Rng, n: usize) -> Demand {
    let entries = (0..n * n).map(|i| if i / n == i % n { 0.0 } else { rng.random_range(0.0..3.0) }).collect();
    Demand::matrix(n, entries).expect("valid demand")
}

/// Relative slack for deciding that a path length equals the distance.
const TIE: f64 = 1e-12;

/// Per-pair geodesic paths found by depth-first enumeration of simple paths.
pub struct BruteForce {
    pub n: usize,
    pub dist: Vec<Vec<f64>>,
    /// `paths[s][t]` lists every geodesic from `s` to `t` as a vertex sequence.
    pub paths: Vec<Vec<Vec<Vec<usize>>>>,
}

impl BruteForce {
    pub fn new(g: &WeightedGraph) -> Self {
        let n = g.vertex_count();
        let mut w = vec![vec![f64::INFINITY; n]; n];
        for e in g.edges() {
            w[e.u][e.v] = w[e.u][e.v].min(e.weight);
            w[e.v][e.u] = w[e.v][e.u].min(e.weight);
        }
        // Floyd-Warshall, only used as a pruning bound and as the distance oracle.
        let mut dist = w.clone();
        for (i, row) in dist.iter_mut().enumerate() {
            row[i] = 0.0;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let via = dist[i][k] + dist[k][j];
                    if via < dist[i][j] {
                        dist[i][j] = via;
                    }
                }
            }
        }
        let mut paths = vec![vec![Vec::new(); n]; n];
        for s in 0..n {
            for t in 0..n {
                if s != t {
                    let mut found = Vec::new();
                    let mut stack = vec![s];
                    let mut seen = vec![false; n];
                    seen[s] = true;
                    walk(&w, &dist, t, 0.0, &mut stack, &mut seen, &mut found);
                    paths[s][t] = found;
                }
            }
        }
        BruteForce { n, dist, paths }
    }

    fn for_each_share(&self, dem: &Demand, mut f: impl FnMut(&[usize], f64)) {
        for s in 0..self.n {
            for t in 0..self.n {
                let ps = &self.paths[s][t];
                if s == t || ps.is_empty() {
                    continue;
                }
                let share = dem.get(s, t) / ps.len() as f64;
                for p in ps {
                    f(p, share);
                }
            }
        }
    }

    /// `tau(e)` for every edge of `g`, in edge id order.
    pub fn edge_rates(&self, g: &WeightedGraph, dem: &Demand) -> Vec<f64> {
        let mut rate = vec![0.0; g.edge_count()];
        self.for_each_share(dem, |p, share| {
            for hop in p.windows(2) {
                let e = g.find_edge(hop[0], hop[1]).expect("path follows edges");
                rate[e.0] += share;
            }
        });
        rate
    }

    /// Betweenness with endpoints included: expected number of times a
    /// routed geodesic has `v` as a vertex.
    pub fn betweenness(&self, dem: &Demand) -> Vec<f64> {
        let mut beta = vec![0.0; self.n];
        self.for_each_share(dem, |p, share| {
            for &v in p {
                beta[v] += share;
            }
        });
        beta
    }

    /// Expected total length of routed geodesics inside the edge set `x`.
    pub fn load(&self, g: &WeightedGraph, dem: &Demand, x: &[(usize, usize)]) -> f64 {
        let inside = |a: usize, b: usize| x.iter().any(|&(u, v)| (u, v) == (a, b) || (u, v) == (b, a));
        let mut total = 0.0;
        self.for_each_share(dem, |p, share| {
            let len: f64 = p
                .windows(2)
                .filter(|hop| inside(hop[0], hop[1]))
                .map(|hop| g.edge(g.find_edge(hop[0], hop[1]).unwrap()).weight)
                .sum();
            total += share * len;
        });
        total
    }
}

fn walk(
    w: &[Vec<f64>],
    dist: &[Vec<f64>],
    target: usize,
    length: f64,
    stack: &mut Vec<usize>,
    seen: &mut [bool],
    found: &mut Vec<Vec<usize>>,
) {
    let s = stack[0];
    let here = *stack.last().unwrap();
    let bound = dist[s][target] * (1.0 + TIE);
    if here == target {
        if length <= bound {
            found.push(stack.clone());
        }
        return;
    }
    for next in 0..w.len() {
        let step = w[here][next];
        if seen[next] || !step.is_finite() || length + step > bound {
            continue;
        }
        seen[next] = true;
        stack.push(next);
        walk(w, dist, target, length + step, stack, seen, found);
        stack.pop();
        seen[next] = false;
    }
}

/// `|a - b| <= tol * max(1, |a|, |b|)`.
pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * 1f64.max(a.abs()).max(b.abs())
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
