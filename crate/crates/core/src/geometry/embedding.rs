use std::fmt::Write as _;

use thiserror::Error;

use super::GeometryError;
use crate::graph::{EdgeId, WeightedGraph};

/// Cyclic order of the neighbours around every vertex.
///
/// Stored as neighbour vertices; the file format names incident edges by
/// [`EdgeId`] instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarEmbedding {
    rotation: Vec<Vec<usize>>,
}

#[derive(Debug, Error)]
pub enum EmbeddingFormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

impl PlanarEmbedding {
    /// Validates that each rotation is a permutation of the vertex's neighbours.
    pub fn new(g: &WeightedGraph, rotation: Vec<Vec<usize>>) -> Result<Self, GeometryError> {
        if rotation.len() != g.vertex_count() {
            return Err(GeometryError::EmbeddingSize { embedding: rotation.len(), graph: g.vertex_count() });
        }
        for (v, ring) in rotation.iter().enumerate() {
            let mut sorted = ring.clone();
            sorted.sort_unstable();
            let expected: Vec<usize> = g.neighbors(v).map(|(u, _, _)| u).collect();
            if sorted != expected {
                return Err(GeometryError::InvalidRotation(v));
            }
        }
        Ok(Self { rotation })
    }

    pub fn rotation(&self, v: usize) -> Option<&[usize]> {
        self.rotation.get(v).map(Vec::as_slice)
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub(crate) fn into_rotations(self) -> Vec<Vec<usize>> {
        self.rotation
    }

    /// Serializes as one `v: e1,e2,...` line per vertex, using vertex labels
    /// and canonical edge ids.
    pub fn to_text(&self, g: &WeightedGraph, comments: &[String]) -> String {
        let mut out = String::new();
        for c in comments {
            let _ = writeln!(out, "# {c}");
        }
        for (v, ring) in self.rotation.iter().enumerate() {
            let ids: Vec<String> = ring
                .iter()
                .map(|&u| g.find_edge(v, u).expect("rotation validated against graph").to_string())
                .collect();
            let _ = writeln!(out, "{}: {}", g.label(v), ids.join(","));
        }
        out
    }

    pub fn parse(text: &str, g: &WeightedGraph) -> Result<Self, EmbeddingFormatError> {
        let err = |line: usize, message: String| EmbeddingFormatError::Parse { line, message };
        let mut rotation: Vec<Option<Vec<usize>>> = vec![None; g.vertex_count()];
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (head, tail) = line.split_once(':').ok_or_else(|| err(i + 1, "missing ':'".into()))?;
            let label: u64 = head.trim().parse().map_err(|_| err(i + 1, format!("bad vertex id {head:?}")))?;
            let v = g.index_of(label).ok_or_else(|| err(i + 1, format!("vertex {label} is not in the graph")))?;
            let mut ring = Vec::new();
            for field in tail.split(',').map(str::trim).filter(|f| !f.is_empty()) {
                let id: usize = field.parse().map_err(|_| err(i + 1, format!("bad edge id {field:?}")))?;
                if id >= g.edge_count() {
                    return Err(err(i + 1, format!("edge {id} is not in the graph")));
                }
                let e = g.edge(EdgeId(id));
                if e.u != v && e.v != v {
                    return Err(err(i + 1, format!("edge {id} is not incident to vertex {label}")));
                }
                ring.push(e.other(v));
            }
            if rotation[v].replace(ring).is_some() {
                return Err(err(i + 1, format!("duplicate line for vertex {label}")));
            }
        }
        let rotation = rotation
            .into_iter()
            .enumerate()
            .map(|(v, r)| r.ok_or(GeometryError::InvalidRotation(v)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(g, rotation)?)
    }
}
