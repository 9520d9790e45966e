use serde::Serialize;

use super::ExperimentError;

/// Ordinary least squares of `ln value` against `ln size`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScalingFit {
    pub points: Vec<(f64, f64)>,
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

impl ScalingFit {
    /// Needs at least three points with strictly increasing positive sizes
    /// and positive values.
    pub fn new(points: Vec<(f64, f64)>) -> Result<Self, ExperimentError> {
        if points.len() < 3 {
            return Err(ExperimentError::TooFewPoints(points.len()));
        }
        if points.windows(2).any(|w| w[1].0 <= w[0].0) {
            return Err(ExperimentError::InvalidSweep("sizes must be strictly increasing".into()));
        }
        if let Some(&(x, y)) = points.iter().find(|&&(x, y)| !(x > 0.0 && y > 0.0 && x.is_finite() && y.is_finite())) {
            return Err(ExperimentError::NonPositive { size: x, value: y });
        }
        let (xs, ys): (Vec<f64>, Vec<f64>) = points.iter().map(|&(x, y)| (x.ln(), y.ln())).unzip();
        let n = xs.len() as f64;
        let (mx, my) = (xs.iter().sum::<f64>() / n, ys.iter().sum::<f64>() / n);
        let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
        let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
        let syy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
        let slope = sxy / sxx;
        let intercept = my - slope * mx;
        let r_squared = if syy == 0.0 { 1.0 } else { (sxy * sxy / (sxx * syy)).min(1.0) };
        Ok(Self { points, slope, intercept, r_squared })
    }
}
