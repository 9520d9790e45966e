//! Deterministic graph families: layered planar triangulations of fixed
//! interior valence, square lattices, and pendant paths used to break symmetry.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{GeometryError, PlanarEmbedding};
use crate::graph::{GraphError, WeightedGraph};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeneratorError {
    #[error("valence {0} is outside 5..=12")]
    InvalidValence(usize),
    #[error("layer count must be at least 1")]
    InvalidLayers,
    #[error("the surface closes after {closed_at} layers; {requested} requested")]
    SurfaceClosed { requested: usize, closed_at: usize },
    #[error("lattice needs side >= 2 and dimension 1..=3, got side {side}, dimension {dim}")]
    InvalidSide { side: usize, dim: usize },
    #[error("appendix length must be at least 1")]
    InvalidAppendix,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingGrowthSpec {
    pub valence: usize,
    pub layers: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSpec {
    pub dim: usize,
    pub side: usize,
}

/// Output of [`ring_growth`]: the graph, its embedding and the layer of every
/// vertex (0 for the centre).
#[derive(Debug, Clone)]
pub struct RingGrowth {
    pub graph: WeightedGraph,
    pub embedding: PlanarEmbedding,
    pub layer: Vec<usize>,
}

struct Builder {
    // rotation[v] keeps the invariant [ccw boundary nbr, inner..., cw boundary nbr]
    // while v is on the boundary, so outer neighbours are appended at the end.
    rotation: Vec<Vec<usize>>,
    layer: Vec<usize>,
}

impl Builder {
    fn add_vertex(&mut self, layer: usize) -> usize {
        self.rotation.push(Vec::new());
        self.layer.push(layer);
        self.rotation.len() - 1
    }
}

/// Layered triangulation in which every vertex not on the final layer has
/// exactly `valence` neighbours.
///
/// Layer 1 is a `valence`-cycle around the centre. Each further layer walks
/// the current boundary counterclockwise; a boundary vertex short of
/// `valence` neighbours receives a run of new outer vertices, the first of
/// which it shares with the previous boundary vertex. When no boundary vertex
/// can take two new neighbours (valence 5) the surface is capped by one apex
/// vertex and growth stops.
pub fn ring_growth(spec: RingGrowthSpec) -> Result<RingGrowth, GeneratorError> {
    let d = spec.valence;
    if !(5..=12).contains(&d) {
        return Err(GeneratorError::InvalidValence(d));
    }
    if spec.layers == 0 {
        return Err(GeneratorError::InvalidLayers);
    }
    let mut b = Builder { rotation: vec![Vec::new()], layer: vec![0] };
    let mut boundary: Vec<usize> = (0..d).map(|_| b.add_vertex(1)).collect();
    b.rotation[0] = boundary.clone();
    for i in 0..d {
        b.rotation[boundary[i]] = vec![boundary[(i + 1) % d], 0, boundary[(i + d - 1) % d]];
    }

    let mut closed = false;
    for layer in 2..=spec.layers {
        if closed {
            return Err(GeneratorError::SurfaceClosed { requested: spec.layers, closed_at: layer - 1 });
        }
        let deficits: Vec<usize> = boundary.iter().map(|&v| d.saturating_sub(b.rotation[v].len())).collect();
        if deficits.iter().all(|&x| x == 1) {
            let apex = b.add_vertex(layer);
            // ccw around the apex runs opposite to the boundary direction
            b.rotation[apex] = boundary.iter().rev().copied().collect();
            for &v in &boundary {
                b.rotation[v].push(apex);
            }
            boundary.clear();
            closed = true;
            continue;
        }
        if deficits.iter().any(|&x| x < 2) {
            return Err(GeneratorError::SurfaceClosed { requested: spec.layers, closed_at: layer - 1 });
        }
        boundary = grow_layer(&mut b, &boundary, &deficits, layer);
    }

    let n = b.rotation.len();
    let mut edges = Vec::new();
    for (u, ring) in b.rotation.iter().enumerate() {
        edges.extend(ring.iter().filter(|&&v| u < v).map(|&v| (u, v, 1.0)));
    }
    let graph = WeightedGraph::with_vertices(n, &edges)?;
    let embedding = PlanarEmbedding::new(&graph, b.rotation)?;
    Ok(RingGrowth { graph, embedding, layer: b.layer })
}

fn grow_layer(b: &mut Builder, boundary: &[usize], deficits: &[usize], layer: usize) -> Vec<usize> {
    let m = boundary.len();
    let mut outer: Vec<usize> = Vec::new();
    // inner neighbours of each new vertex in connection order (cw to ccw)
    let mut inner: Vec<Vec<usize>> = Vec::new();
    let first = b.add_vertex(layer);
    outer.push(first);
    inner.push(Vec::new());
    let mut cursor = 0usize;
    for (i, &v) in boundary.iter().enumerate() {
        let mut run = vec![outer[cursor]];
        inner[cursor].push(v);
        for j in 1..deficits[i] {
            let closing = i == m - 1 && j == deficits[i] - 1;
            let next = if closing {
                0
            } else {
                let w = b.add_vertex(layer);
                outer.push(w);
                inner.push(Vec::new());
                outer.len() - 1
            };
            inner[next].push(v);
            run.push(outer[next]);
            cursor = next;
        }
        b.rotation[v].extend(run);
    }
    // the closing connection of the last boundary vertex precedes the first
    // one in cw-to-ccw order around the seam vertex
    inner[0].rotate_right(1);
    let k = outer.len();
    for (idx, &w) in outer.iter().enumerate() {
        let mut ring = vec![outer[(idx + 1) % k]];
        ring.extend(inner[idx].iter().rev());
        ring.push(outer[(idx + k - 1) % k]);
        b.rotation[w] = ring;
    }
    outer
}

/// Grid graph on `side^dim` vertices with unit nearest-neighbour edges.
/// Vertex ids are mixed-radix with the first coordinate varying fastest.
pub fn lattice(spec: LatticeSpec) -> Result<WeightedGraph, GeneratorError> {
    let LatticeSpec { dim, side } = spec;
    if side < 2 || !(1..=3).contains(&dim) {
        return Err(GeneratorError::InvalidSide { side, dim });
    }
    let n = side.pow(dim as u32);
    let mut edges = Vec::new();
    for v in 0..n {
        let mut stride = 1;
        for _ in 0..dim {
            if (v / stride) % side + 1 < side {
                edges.push((v, v + stride, 1.0));
            }
            stride *= side;
        }
    }
    Ok(WeightedGraph::with_vertices(n, &edges)?)
}

/// Hangs a path of `length` new unit edges at `at`. New vertices take the
/// next free ids (labels continue after the current maximum label).
pub fn attach_appendix(g: &WeightedGraph, at: usize, length: usize) -> Result<WeightedGraph, GeneratorError> {
    if at >= g.vertex_count() {
        return Err(GraphError::UnknownVertex(at).into());
    }
    if length == 0 {
        return Err(GeneratorError::InvalidAppendix);
    }
    let mut edges = g.labeled_edges();
    let base = g.labels().last().copied().unwrap_or(0) + 1;
    let mut prev = g.label(at);
    for i in 0..length as u64 {
        edges.push((prev, base + i, 1.0));
        prev = base + i;
    }
    Ok(crate::graph::build_graph(&edges)?)
}

/// [`attach_appendix`] on an embedded graph with dense labels `0..N`; the
/// new edge goes first in the cyclic order at `at`.
pub fn attach_appendix_embedded(
    g: &WeightedGraph,
    emb: &PlanarEmbedding,
    at: usize,
    length: usize,
) -> Result<(WeightedGraph, PlanarEmbedding), GeneratorError> {
    if at >= g.vertex_count() {
        return Err(GraphError::UnknownVertex(at).into());
    }
    if length == 0 {
        return Err(GeneratorError::InvalidAppendix);
    }
    let n = g.vertex_count();
    let mut edges: Vec<(usize, usize, f64)> = g.edges().iter().map(|e| (e.u, e.v, e.weight)).collect();
    let mut rotation = emb.clone().into_rotations();
    rotation[at].insert(0, n);
    let mut prev = at;
    for i in 0..length {
        let v = n + i;
        edges.push((prev, v, 1.0));
        let mut ring = vec![prev];
        if i + 1 < length {
            ring.push(v + 1);
        }
        rotation.push(ring);
        prev = v;
    }
    let graph = WeightedGraph::with_vertices(n + length, &edges)?;
    let embedding = PlanarEmbedding::new(&graph, rotation)?;
    Ok((graph, embedding))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::vertex_curvature;
    use crate::graph::build_graph;

    #[test]
    fn first_layer_counts() {
        let r = ring_growth(RingGrowthSpec { valence: 7, layers: 1 }).unwrap();
        assert_eq!(r.graph.vertex_count(), 8);
        assert_eq!(r.graph.degree(0), 7);
        let r = ring_growth(RingGrowthSpec { valence: 6, layers: 1 }).unwrap();
        assert_eq!(r.graph.vertex_count(), 7);
        assert!(vertex_curvature(&r.graph, &r.embedding, 0).unwrap().kappa.abs() < 1e-12);
    }

    #[test]
    fn second_layer_gives_the_first_boundary_vertex_four_new_neighbours() {
        let r = ring_growth(RingGrowthSpec { valence: 7, layers: 2 }).unwrap();
        // vertex 1 (the first layer-1 vertex) is joined to new vertices 8..=11
        let new: Vec<usize> = r.graph.neighbors(1).map(|(u, _, _)| u).filter(|&u| u >= 8).collect();
        assert_eq!(new, vec![8, 9, 10, 11]);
        assert_eq!(r.graph.vertex_count(), 1 + 7 + 21);
    }

    #[test]
    fn interior_vertices_have_exact_valence() {
        for d in 6..=9 {
            for layers in 1..=4 {
                let r = ring_growth(RingGrowthSpec { valence: d, layers }).unwrap();
                assert!(r.graph.is_connected());
                for v in 0..r.graph.vertex_count() {
                    if r.layer[v] < layers {
                        assert_eq!(r.graph.degree(v), d, "d={d} L={layers} v={v}");
                    } else {
                        assert!(r.graph.degree(v) < d);
                    }
                }
            }
        }
    }

    #[test]
    fn interior_curvature_matches_valence() {
        for d in 6..=8 {
            let r = ring_growth(RingGrowthSpec { valence: d, layers: 3 }).unwrap();
            for v in (0..r.graph.vertex_count()).filter(|&v| r.layer[v] < 3) {
                let k = vertex_curvature(&r.graph, &r.embedding, v).unwrap().kappa;
                match d {
                    6 => assert!(k.abs() < 1e-12),
                    _ => assert!(k < 0.0),
                }
            }
        }
    }

    #[test]
    fn valence_five_closes_into_an_icosahedron() {
        let r = ring_growth(RingGrowthSpec { valence: 5, layers: 3 }).unwrap();
        assert_eq!(r.graph.vertex_count(), 12);
        assert_eq!(r.graph.edge_count(), 30);
        for v in 0..12 {
            assert_eq!(r.graph.degree(v), 5);
            assert!(vertex_curvature(&r.graph, &r.embedding, v).unwrap().kappa > 0.0);
        }
        assert!(matches!(
            ring_growth(RingGrowthSpec { valence: 5, layers: 4 }),
            Err(GeneratorError::SurfaceClosed { closed_at: 3, .. })
        ));
    }

    #[test]
    fn bad_specs() {
        assert_eq!(ring_growth(RingGrowthSpec { valence: 4, layers: 1 }).unwrap_err(), GeneratorError::InvalidValence(4));
        assert_eq!(ring_growth(RingGrowthSpec { valence: 13, layers: 1 }).unwrap_err(), GeneratorError::InvalidValence(13));
        assert_eq!(ring_growth(RingGrowthSpec { valence: 7, layers: 0 }).unwrap_err(), GeneratorError::InvalidLayers);
        assert!(lattice(LatticeSpec { dim: 2, side: 1 }).is_err());
        assert!(lattice(LatticeSpec { dim: 4, side: 3 }).is_err());
    }

    #[test]
    fn growth_is_geometric_for_negative_curvature() {
        let sizes: Vec<usize> = (1..=6)
            .map(|l| ring_growth(RingGrowthSpec { valence: 7, layers: l }).unwrap().graph.vertex_count())
            .collect();
        assert_eq!(&sizes[..4], &[8, 29, 85, 232]);
        for w in sizes.windows(2).skip(1) {
            assert!(w[1] as f64 / w[0] as f64 >= 1.5);
        }
    }

    #[test]
    fn lattices() {
        let sq = lattice(LatticeSpec { dim: 2, side: 2 }).unwrap();
        assert_eq!(sq.labeled_edges(), vec![(0, 1, 1.0), (0, 2, 1.0), (1, 3, 1.0), (2, 3, 1.0)]);
        let g = lattice(LatticeSpec { dim: 2, side: 3 }).unwrap();
        assert_eq!((g.vertex_count(), g.degree(4)), (9, 4));
        let p = lattice(LatticeSpec { dim: 1, side: 5 }).unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (5, 4));
        let c = lattice(LatticeSpec { dim: 3, side: 3 }).unwrap();
        assert_eq!((c.vertex_count(), c.degree(13)), (27, 6));
    }

    #[test]
    fn appendices() {
        let p = build_graph(&[(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        let q = attach_appendix(&p, 2, 2).unwrap();
        assert_eq!(q, lattice(LatticeSpec { dim: 1, side: 5 }).unwrap());
        let star = build_graph(&[(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0)]).unwrap();
        let s4 = attach_appendix(&star, 0, 1).unwrap();
        assert_eq!(s4.degree(0), 4);
        assert_eq!(s4.vertex_count(), 5);
        assert!(attach_appendix(&p, 9, 1).is_err());
        assert_eq!(attach_appendix(&p, 0, 0).unwrap_err(), GeneratorError::InvalidAppendix);
    }

    #[test]
    fn embedded_appendix_goes_first() {
        let r = ring_growth(RingGrowthSpec { valence: 7, layers: 2 }).unwrap();
        let (g, emb) = attach_appendix_embedded(&r.graph, &r.embedding, 12, 3).unwrap();
        assert_eq!(g.vertex_count(), 32);
        assert_eq!(emb.rotation(12).unwrap()[0], 29);
        assert_eq!(emb.rotation(31).unwrap(), &[30]);
        // interior vertices keep their curvature
        assert!(vertex_curvature(&g, &emb, 0).unwrap().kappa < 0.0);
    }

    #[test]
    fn generators_are_deterministic() {
        let a = ring_growth(RingGrowthSpec { valence: 8, layers: 3 }).unwrap();
        let b = ring_growth(RingGrowthSpec { valence: 8, layers: 3 }).unwrap();
        assert_eq!(a.graph, b.graph);
        assert_eq!(a.embedding, b.embedding);
    }
}
