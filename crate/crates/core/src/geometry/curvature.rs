use std::f64::consts::PI;

use serde::Serialize;

use super::{GeometryError, PlanarEmbedding, TRIANGLE_TOLERANCE};
use crate::graph::WeightedGraph;

fn check_triangle(d1: f64, d2: f64, d3: f64) -> Result<(), GeometryError> {
    let slack = [d1 + d2 - d3, d1 + d3 - d2, d2 + d3 - d1];
    if slack.iter().any(|&s| s < -TRIANGLE_TOLERANCE) || !(d1 + d2 + d3).is_finite() {
        return Err(GeometryError::TriangleInequalityViolated(d1, d2, d3));
    }
    Ok(())
}

/// Corner angle at `a` of the triangle with side lengths `d_ab`, `d_ac`,
/// `d_bc`, by the Euclidean law of cosines.
pub fn alexandrov_angle(d_ab: f64, d_ac: f64, d_bc: f64) -> Result<f64, GeometryError> {
    for d in [d_ab, d_ac, d_bc] {
        if d.is_nan() || d <= 0.0 {
            return Err(GeometryError::NonPositiveLength(d));
        }
    }
    check_triangle(d_ab, d_ac, d_bc)?;
    let cos = (d_ab * d_ab + d_ac * d_ac - d_bc * d_bc) / (2.0 * d_ab * d_ac);
    Ok(cos.clamp(-1.0, 1.0).acos())
}

/// Triangle area from side lengths (Heron). A radicand that is negative only
/// through rounding is clamped to zero.
pub fn heron_area(d1: f64, d2: f64, d3: f64) -> Result<f64, GeometryError> {
    for d in [d1, d2, d3] {
        if d < 0.0 {
            return Err(GeometryError::NonPositiveLength(d));
        }
    }
    check_triangle(d1, d2, d3)?;
    let s = 0.5 * (d1 + d2 + d3);
    Ok((s * (s - d1) * (s - d2) * (s - d3)).max(0.0).sqrt())
}

/// Angular defect over area at one vertex of a planar triangulation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VertexCurvature {
    pub vertex: usize,
    /// Corner angles, one per consecutive neighbour pair in cyclic order.
    pub angles: Vec<f64>,
    pub areas: Vec<f64>,
    pub kappa: f64,
}

impl VertexCurvature {
    pub fn angle_sum(&self) -> f64 {
        self.angles.iter().sum()
    }

    pub fn total_area(&self) -> f64 {
        self.areas.iter().sum()
    }
}

/// `kappa(a) = (2 pi - sum of corner angles) / (sum of corner triangle areas)`.
///
/// Side lengths come from edge weights: `d(a, b_k)` is the weight of the edge
/// `a b_k`, and consecutive neighbours `b_k, b_{k+1}` must themselves be joined
/// by an edge.
pub fn vertex_curvature(g: &WeightedGraph, emb: &PlanarEmbedding, a: usize) -> Result<VertexCurvature, GeometryError> {
    let ring = emb.rotation(a).ok_or(crate::graph::GraphError::UnknownVertex(a))?;
    let deg = ring.len();
    if deg < 3 {
        return Err(GeometryError::TooFewNeighbors(a));
    }
    let mut angles = Vec::with_capacity(deg);
    let mut areas = Vec::with_capacity(deg);
    for k in 0..deg {
        let (b, c) = (ring[k], ring[(k + 1) % deg]);
        let length = |x: usize, y: usize| {
            g.find_edge(x, y).map(|e| g.edge(e).weight)
        };
        let (Some(ab), Some(ac)) = (length(a, b), length(a, c)) else {
            return Err(GeometryError::InvalidRotation(a));
        };
        let bc = length(b, c).ok_or(GeometryError::NotInterior { vertex: a, a: b, b: c })?;
        angles.push(alexandrov_angle(ab, ac, bc)?);
        areas.push(heron_area(ab, ac, bc)?);
    }
    let area: f64 = areas.iter().sum();
    if area <= 0.0 {
        return Err(GeometryError::ZeroArea(a));
    }
    let kappa = (2.0 * PI - angles.iter().sum::<f64>()) / area;
    Ok(VertexCurvature { vertex: a, angles, areas, kappa })
}
