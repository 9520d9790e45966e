use serde::Serialize;

use super::{ExperimentError, DEFAULT_BUDGET};
use crate::generators::{lattice, ring_growth, LatticeSpec, RingGrowthSpec};
use crate::geometry::{congestion_inertia_report, graph_inertia};
use crate::graph::{compute_geodesics, vertex_traffic, Demand, GraphError, WeightedGraph};

/// One line of the congestion-versus-inertia comparison.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConjectureRow {
    pub name: String,
    pub vertices: usize,
    pub max_traffic: Vec<usize>,
    pub min_inertia: Vec<usize>,
    /// Graph distance between the two vertex sets.
    pub distance: f64,
    /// `max tau / median tau`.
    pub spikiness: f64,
    pub rank_correlation: Option<f64>,
}

pub fn conjecture_row(name: &str, g: &WeightedGraph) -> Result<ConjectureRow, GraphError> {
    let gd = compute_geodesics(g)?;
    let traffic = vertex_traffic(&gd, &Demand::Uniform)?;
    let inertia = graph_inertia(&gd, 2.0);
    let r = congestion_inertia_report(&traffic, &inertia, &gd);
    Ok(ConjectureRow {
        name: name.to_string(),
        vertices: g.vertex_count(),
        max_traffic: r.max_traffic,
        min_inertia: r.min_inertia,
        distance: r.distance,
        spikiness: r.spikiness,
        rank_correlation: r.rank_correlation,
    })
}

/// Layer count whose ring-growth graph size is closest to `target`.
fn layers_near(valence: usize, target: usize) -> Result<(usize, WeightedGraph), ExperimentError> {
    let mut best: Option<(usize, WeightedGraph)> = None;
    for layers in 1.. {
        let g = ring_growth(RingGrowthSpec { valence, layers })?.graph;
        let n = g.vertex_count();
        let closer = best.as_ref().is_none_or(|(_, b)| n.abs_diff(target) < b.vertex_count().abs_diff(target));
        if closer {
            best = Some((layers, g));
        }
        if n >= target {
            break;
        }
    }
    Ok(best.expect("at least one layer is built"))
}

/// Compares ring-growth graphs of valence 6, 7 and 8 and a square lattice,
/// each sized as close to `target` vertices as the family allows.
pub fn conjecture_report(target: usize) -> Result<Vec<ConjectureRow>, ExperimentError> {
    if target > DEFAULT_BUDGET {
        return Err(ExperimentError::BudgetExceeded { size: target, budget: DEFAULT_BUDGET });
    }
    let mut rows = Vec::new();
    for valence in [6, 7, 8] {
        let (layers, g) = layers_near(valence, target)?;
        rows.push(conjecture_row(&format!("ring_growth/d={valence}/L={layers}"), &g)?);
    }
    let side = ((target as f64).sqrt().round() as usize).max(2);
    let g = lattice(LatticeSpec { dim: 2, side })?;
    rows.push(conjecture_row(&format!("lattice/n=2/L={side}"), &g)?);
    Ok(rows)
}
