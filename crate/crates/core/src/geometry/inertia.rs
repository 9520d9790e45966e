use serde::Serialize;

use crate::graph::{Demand, GeodesicData, GraphError};

/// Relative slack when collecting all minimizers of the inertia.
const CENTROID_TIE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InertiaReport {
    pub exponent: f64,
    /// `phi^(p)(v)` for every vertex.
    pub inertia: Vec<f64>,
    /// Every vertex attaining the minimum, in increasing order.
    pub centroid: Vec<usize>,
}

impl InertiaReport {
    fn from_values(exponent: f64, inertia: Vec<f64>) -> Self {
        let min = inertia.iter().copied().fold(f64::INFINITY, f64::min);
        let centroid = inertia
            .iter()
            .enumerate()
            .filter(|&(_, &phi)| phi - min <= CENTROID_TIE * min.abs().max(f64::MIN_POSITIVE))
            .map(|(v, _)| v)
            .collect();
        Self { exponent, inertia, centroid }
    }

    pub fn min(&self) -> f64 {
        self.inertia[self.centroid[0]]
    }
}

fn power(d: f64, p: f64) -> f64 {
    if p == 2.0 {
        d * d
    } else {
        d.powf(p)
    }
}

/// `phi^(p)(v) = sum over v' of d(v, v')^p`; the centroid minimizes it.
///
/// # Panics
/// If `p` is negative or not finite.
pub fn graph_inertia(gd: &GeodesicData<'_>, p: f64) -> InertiaReport {
    assert!(p.is_finite() && p >= 0.0, "inertia exponent must be a finite non-negative number");
    let n = gd.vertex_count();
    let values = (0..n)
        .map(|v| (0..n).filter(|&u| u != v).map(|u| power(gd.distance(v, u), p)).sum())
        .collect();
    InertiaReport::from_values(p, values)
}

/// Inertia with each target weighted by the demand it originates:
/// `phi(v) = sum_i d(v, v_i)^p * sum_j demand(v_i, v_j)`.
pub fn demand_weighted_inertia(gd: &GeodesicData<'_>, dem: &Demand, p: f64) -> Result<InertiaReport, GraphError> {
    assert!(p.is_finite() && p >= 0.0, "inertia exponent must be a finite non-negative number");
    let n = gd.vertex_count();
    dem.check(n)?;
    let mass: Vec<f64> = (0..n).map(|i| dem.row_sum(i, n)).collect();
    let values = (0..n)
        .map(|v| (0..n).filter(|&u| u != v).map(|u| power(gd.distance(v, u), p) * mass[u]).sum())
        .collect();
    Ok(InertiaReport::from_values(p, values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, compute_geodesics, WeightedGraph};

    #[test]
    fn path_inertia() {
        let g = build_graph(&[(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        let gd = compute_geodesics(&g).unwrap();
        let r = graph_inertia(&gd, 2.0);
        assert_eq!(r.inertia, vec![5.0, 2.0, 5.0]);
        assert_eq!(r.centroid, vec![1]);
    }

    #[test]
    fn single_vertex() {
        let g = WeightedGraph::with_vertices(1, &[]).unwrap();
        let gd = compute_geodesics(&g).unwrap();
        let r = graph_inertia(&gd, 2.0);
        assert_eq!(r.inertia, vec![0.0]);
        assert_eq!(r.centroid, vec![0]);
    }

    #[test]
    fn four_cycle_is_all_centroid() {
        let g = build_graph(&[(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 0, 1.0)]).unwrap();
        let gd = compute_geodesics(&g).unwrap();
        let r = graph_inertia(&gd, 2.0);
        assert_eq!(r.inertia, vec![6.0; 4]);
        assert_eq!(r.centroid, vec![0, 1, 2, 3]);
    }

    #[test]
    fn demand_weighted_variants() {
        let g = build_graph(&[(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        let gd = compute_geodesics(&g).unwrap();
        let uniform = demand_weighted_inertia(&gd, &Demand::Uniform, 2.0).unwrap();
        assert_eq!(uniform.inertia[1], 4.0);
        assert_eq!(uniform.inertia, vec![10.0, 4.0, 10.0]);

        let from_a = demand_weighted_inertia(&gd, &Demand::single_source(3, 0), 2.0).unwrap();
        assert_eq!(from_a.inertia, vec![0.0, 2.0, 8.0]);
        assert_eq!(from_a.centroid, vec![0]);

        let zero = demand_weighted_inertia(&gd, &Demand::matrix(3, vec![0.0; 9]).unwrap(), 2.0).unwrap();
        assert_eq!(zero.inertia, vec![0.0; 3]);
        assert!(demand_weighted_inertia(&gd, &Demand::single_source(2, 0), 2.0).is_err());
    }
}
