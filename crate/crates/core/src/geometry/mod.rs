//! Discrete geometry of weighted graphs: corner angles and vertex curvature
//! on planar triangulations, thin-triangle hyperbolicity, moments of inertia
//! and the traffic-versus-inertia report.

mod curvature;
mod delta;
mod embedding;
mod inertia;
mod report;

pub use curvature::{alexandrov_angle, heron_area, vertex_curvature, VertexCurvature};
pub use delta::{gromov_delta, gromov_delta_for_triples, DeltaEstimate, TripleSampling};
pub use embedding::{EmbeddingFormatError, PlanarEmbedding};
pub use inertia::{demand_weighted_inertia, graph_inertia, InertiaReport};
pub use report::{congestion_inertia_report, spearman, CongestionInertiaReport};

use thiserror::Error;

use crate::graph::GraphError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("side lengths ({0}, {1}, {2}) violate the triangle inequality")]
    TriangleInequalityViolated(f64, f64, f64),
    #[error("side length {0} is not positive")]
    NonPositiveLength(f64),
    #[error("vertex {vertex} is not interior: neighbours {a} and {b} are consecutive but not adjacent")]
    NotInterior { vertex: usize, a: usize, b: usize },
    #[error("vertex {0} has fewer than three neighbours")]
    TooFewNeighbors(usize),
    #[error("corner triangles around vertex {0} have zero total area")]
    ZeroArea(usize),
    #[error("cyclic order at vertex {0} is not a permutation of its incident edges")]
    InvalidRotation(usize),
    #[error("embedding covers {embedding} vertices but the graph has {graph}")]
    EmbeddingSize { embedding: usize, graph: usize },
    #[error("no triples to sample")]
    EmptySample,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Absolute slack allowed on the triangle inequality.
pub(crate) const TRIANGLE_TOLERANCE: f64 = 1e-9;
