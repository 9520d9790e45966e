//! Thin-triangle hyperbolicity: for each geodesic triangle, the smallest
//! perimeter of a triangle with one vertex on each side.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::GeometryError;
use crate::graph::GeodesicData;

const SHARD: usize = 1024;

/// How triangles are chosen. All `C(N, 3)` triples are used when there are at
/// most `budget` of them; otherwise `budget` triples are drawn uniformly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TripleSampling {
    pub budget: usize,
    pub seed: u64,
}

impl Default for TripleSampling {
    fn default() -> Self {
        Self { budget: 20_000, seed: 1 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DeltaEstimate {
    pub delta: f64,
    pub triples: usize,
    pub exhaustive: bool,
    /// Triple achieving the maximum (first one in sample order).
    pub argmax: (usize, usize, usize),
}

/// Smallest inscribed perimeter for the triangle `(a, b, c)`, with each side
/// taken as the lexicographically smallest geodesic and inscribed points
/// restricted to vertices on those geodesics.
pub fn triangle_thinness(gd: &GeodesicData<'_>, a: usize, b: usize, c: usize) -> f64 {
    let side_x = gd.lexicographic_geodesic(b, c);
    let side_y = gd.lexicographic_geodesic(a, c);
    let side_z = gd.lexicographic_geodesic(a, b);
    let mut best = f64::INFINITY;
    for &x in &side_x {
        for &y in &side_y {
            let xy = gd.distance(x, y);
            if xy >= best {
                continue;
            }
            for &z in &side_z {
                let p = xy + gd.distance(y, z) + gd.distance(z, x);
                if p < best {
                    best = p;
                }
            }
        }
    }
    best
}

fn max_over(gd: &GeodesicData<'_>, triples: &[(usize, usize, usize)]) -> (f64, (usize, usize, usize)) {
    let mut best = (f64::NEG_INFINITY, (0, 0, 0));
    for &(a, b, c) in triples {
        let d = triangle_thinness(gd, a, b, c);
        if d > best.0 {
            best = (d, (a, b, c));
        }
    }
    best
}

/// Maximum thinness over an explicit list of triples.
pub fn gromov_delta_for_triples(
    gd: &GeodesicData<'_>,
    triples: &[(usize, usize, usize)],
) -> Result<DeltaEstimate, GeometryError> {
    if triples.is_empty() {
        return Err(GeometryError::EmptySample);
    }
    let n = gd.vertex_count();
    if let Some(&(a, b, c)) = triples.iter().find(|&&(a, b, c)| a >= n || b >= n || c >= n) {
        return Err(crate::graph::GraphError::VertexOutOfRange(a.max(b).max(c)).into());
    }
    let shards: Vec<(f64, (usize, usize, usize))> = triples.par_chunks(SHARD).map(|chunk| max_over(gd, chunk)).collect();
    Ok(reduce(shards, triples.len(), false))
}

fn reduce(shards: Vec<(f64, (usize, usize, usize))>, triples: usize, exhaustive: bool) -> DeltaEstimate {
    let mut best = (f64::NEG_INFINITY, (0, 0, 0));
    for s in shards {
        if s.0 > best.0 {
            best = s;
        }
    }
    DeltaEstimate { delta: best.0.max(0.0), triples, exhaustive, argmax: best.1 }
}

fn binomial3(n: usize) -> u128 {
    let n = n as u128;
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

fn all_triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                out.push((a, b, c));
            }
        }
    }
    out
}

fn random_triple(rng: &mut ChaCha8Rng, n: usize) -> (usize, usize, usize) {
    let a = rng.random_range(0..n);
    let mut b = rng.random_range(0..n - 1);
    if b >= a {
        b += 1;
    }
    let (lo, hi) = (a.min(b), a.max(b));
    let mut c = rng.random_range(0..n - 2);
    if c >= lo {
        c += 1;
    }
    if c >= hi {
        c += 1;
    }
    let mut t = [a, b, c];
    t.sort_unstable();
    (t[0], t[1], t[2])
}

/// Estimates delta over distinct vertex triples per `sampling`.
pub fn gromov_delta(gd: &GeodesicData<'_>, sampling: TripleSampling) -> Result<DeltaEstimate, GeometryError> {
    let n = gd.vertex_count();
    let total = binomial3(n);
    if total == 0 || sampling.budget == 0 {
        return Err(GeometryError::EmptySample);
    }
    if total <= sampling.budget as u128 {
        let triples = all_triples(n);
        let shards = triples.par_chunks(SHARD).map(|chunk| max_over(gd, chunk)).collect();
        return Ok(reduce(shards, triples.len(), true));
    }
    let shard_count = sampling.budget.div_ceil(SHARD);
    let shards = (0..shard_count)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(sampling.seed);
            rng.set_stream(i as u64);
            let len = SHARD.min(sampling.budget - i * SHARD);
            let triples: Vec<_> = (0..len).map(|_| random_triple(&mut rng, n)).collect();
            max_over(gd, &triples)
        })
        .collect();
    Ok(reduce(shards, sampling.budget, false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, compute_geodesics};

    #[test]
    fn trees_are_zero_hyperbolic() {
        let g = build_graph(&[(0, 1, 1.0), (1, 2, 2.0), (1, 3, 1.0), (3, 4, 1.5), (3, 5, 1.0), (0, 6, 1.0)]).unwrap();
        let gd = compute_geodesics(&g).unwrap();
        let est = gromov_delta(&gd, TripleSampling::default()).unwrap();
        assert!(est.exhaustive);
        assert_eq!(est.triples, 35);
        assert_eq!(est.delta, 0.0);
    }

    #[test]
    fn triangle_k3() {
        let g = build_graph(&[(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0)]).unwrap();
        let gd = compute_geodesics(&g).unwrap();
        let est = gromov_delta(&gd, TripleSampling::default()).unwrap();
        assert_eq!(est.delta, 2.0);
        assert_eq!(est.argmax, (0, 1, 2));
    }

    #[test]
    fn degenerate_triangle_on_path() {
        let g = build_graph(&[(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        let gd = compute_geodesics(&g).unwrap();
        assert_eq!(gromov_delta_for_triples(&gd, &[(0, 1, 2)]).unwrap().delta, 0.0);
    }

    #[test]
    fn empty_samples_are_errors() {
        let g = build_graph(&[(0, 1, 1.0)]).unwrap();
        let gd = compute_geodesics(&g).unwrap();
        assert_eq!(gromov_delta(&gd, TripleSampling::default()), Err(GeometryError::EmptySample));
        assert_eq!(gromov_delta_for_triples(&gd, &[]), Err(GeometryError::EmptySample));
    }

    #[test]
    fn sampled_mode_is_reproducible() {
        let edges: Vec<(u64, u64, f64)> = (0..12u64).map(|i| (i, (i + 1) % 12, 1.0)).collect();
        let g = build_graph(&edges).unwrap();
        let gd = compute_geodesics(&g).unwrap();
        let s = TripleSampling { budget: 100, seed: 9 };
        let a = gromov_delta(&gd, s).unwrap();
        assert!(!a.exhaustive);
        assert_eq!(a, gromov_delta(&gd, s).unwrap());
        let (x, y, z) = a.argmax;
        assert!(x < y && y < z && z < 12);
    }

    #[test]
    fn random_triples_are_distinct() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..2000 {
            let (a, b, c) = random_triple(&mut rng, 4);
            assert!(a < b && b < c && c < 4);
        }
    }
}
