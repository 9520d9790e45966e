use serde::Serialize;

use super::InertiaReport;
use crate::graph::{GeodesicData, TrafficReport};

const ARGMAX_TIE: f64 = 1e-12;

/// Where traffic peaks relative to where inertia bottoms out. Descriptive only.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CongestionInertiaReport {
    /// Vertices of maximum `tau(v)`.
    pub max_traffic: Vec<usize>,
    /// Vertices of minimum inertia.
    pub min_inertia: Vec<usize>,
    /// Smallest graph distance between the two sets.
    pub distance: f64,
    /// Spearman correlation between `tau` and `-phi`; `None` when either is constant.
    pub rank_correlation: Option<f64>,
    /// `max tau / median tau`.
    pub spikiness: f64,
}

pub fn congestion_inertia_report(
    traffic: &TrafficReport,
    inertia: &InertiaReport,
    gd: &GeodesicData<'_>,
) -> CongestionInertiaReport {
    let tau = &traffic.vertex_rate;
    let max = tau.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let max_traffic: Vec<usize> = (0..tau.len())
        .filter(|&v| max - tau[v] <= ARGMAX_TIE * max.abs().max(f64::MIN_POSITIVE))
        .collect();
    let distance = max_traffic
        .iter()
        .flat_map(|&u| inertia.centroid.iter().map(move |&v| gd.distance(u, v)))
        .fold(f64::INFINITY, f64::min);
    let neg_phi: Vec<f64> = inertia.inertia.iter().map(|x| -x).collect();
    CongestionInertiaReport {
        max_traffic,
        min_inertia: inertia.centroid.clone(),
        distance,
        rank_correlation: spearman(tau, &neg_phi),
        spikiness: max / median(tau),
    }
}

pub(crate) fn median(xs: &[f64]) -> f64 {
    let mut v = xs.to_vec();
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

/// Ranks starting at 1, ties sharing their average rank.
fn ranks(xs: &[f64]) -> Vec<f64> {
    let mut idx: Vec<usize> = (0..xs.len()).collect();
    idx.sort_by(|&a, &b| xs[a].total_cmp(&xs[b]));
    let mut out = vec![0.0; xs.len()];
    let mut i = 0;
    while i < idx.len() {
        let mut j = i;
        while j + 1 < idx.len() && xs[idx[j + 1]] == xs[idx[i]] {
            j += 1;
        }
        let avg = (i + j) as f64 / 2.0 + 1.0;
        for &k in &idx[i..=j] {
            out[k] = avg;
        }
        i = j + 1;
    }
    out
}

/// Spearman rank correlation (Pearson correlation of average ranks).
pub fn spearman(x: &[f64], y: &[f64]) -> Option<f64> {
    assert_eq!(x.len(), y.len());
    let (rx, ry) = (ranks(x), ranks(y));
    let n = x.len() as f64;
    let (mx, my) = (rx.iter().sum::<f64>() / n, ry.iter().sum::<f64>() / n);
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in rx.iter().zip(&ry) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx) * (a - mx);
        syy += (b - my) * (b - my);
    }
    if sxx == 0.0 || syy == 0.0 {
        return None;
    }
    Some(sxy / (sxx * syy).sqrt())
}
