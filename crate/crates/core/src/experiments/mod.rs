//! Scaling sweeps over graph families and continuum balls, log-log fits, and
//! the congestion/inertia comparison across valences.

mod fit;
mod output;
mod report;

use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::continuum::{
    continuum_inertia, lambda_ball, lambda_whole_sphere, mu_density, mu_density_whole_sphere, BallConfig,
    ContinuumError, CurvatureClass, SpaceSpec,
};
use crate::generators::{lattice, ring_growth, GeneratorError, LatticeSpec, RingGrowthSpec};
use crate::graph::{max_betweenness, GraphError, WeightedGraph};

pub use fit::ScalingFit;
pub use output::{fit_json, write_experiment_outputs, write_plot_data, write_results_csv};
pub use report::{conjecture_report, conjecture_row, ConjectureRow};

/// Largest graph a discrete sweep will build unless the config says otherwise.
pub const DEFAULT_BUDGET: usize = 30_000;

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("invalid experiment config: {0}")]
    InvalidConfig(String),
    #[error("invalid sweep: {0}")]
    InvalidSweep(String),
    #[error("a fit needs at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("cannot take logs of size {size}, value {value}")]
    NonPositive { size: f64, value: f64 },
    #[error("graph with {size} vertices exceeds the budget of {budget}")]
    BudgetExceeded { size: usize, budget: usize },
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Continuum(#[from] ContinuumError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl ExperimentError {
    /// True for numerical non-convergence, as opposed to bad input.
    pub fn is_numeric(&self) -> bool {
        matches!(self, ExperimentError::Continuum(ContinuumError::QuadratureNotConverged(_)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    /// Largest betweenness over the vertices.
    #[serde(alias = "max_beta_c")]
    MaxBetweenness,
    /// Normalized load of the inner ball.
    Lambda,
    /// Geodesic density at a point.
    Mu,
    /// Moment of inertia about a point.
    Phi,
}

impl Metric {
    pub fn name(self) -> &'static str {
        match self {
            Metric::MaxBetweenness => "max_beta_c",
            Metric::Lambda => "lambda",
            Metric::Mu => "mu",
            Metric::Phi => "phi",
        }
    }
}

/// Region over which continuum pairs are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Domain {
    /// `B_R(0)` at fixed curvature; the sweep varies `R`.
    #[default]
    Ball,
    /// The whole sphere of radius `R`, i.e. curvature `1/R^2`; the sweep varies `R`.
    WholeSphere,
}

fn one() -> f64 {
    1.0
}

fn two() -> f64 {
    2.0
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ContinuumParams {
    pub space: CurvatureClass,
    pub n: usize,
    #[serde(default = "one")]
    pub k: f64,
    /// Inner ball radius.
    #[serde(default = "one")]
    pub r: f64,
    #[serde(default)]
    pub rho: f64,
    /// Base point distance for `mu` and `phi`.
    #[serde(default)]
    pub a: f64,
    #[serde(default = "two")]
    pub p: f64,
    #[serde(default)]
    pub domain: Domain,
}

impl ContinuumParams {
    fn space(&self) -> SpaceSpec {
        SpaceSpec { dimension: self.n, class: self.space, k: self.k }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", content = "params", rename_all = "snake_case")]
pub enum Family {
    /// Sweep values are layer counts.
    RingGrowth { valence: usize },
    /// Sweep values are side lengths.
    Lattice { dim: usize },
    /// Sweep values are outer radii.
    Continuum(ContinuumParams),
}

fn default_seed() -> u64 {
    1
}

/// An experiment as read from JSON, e.g.
/// `{"family": "lattice", "params": {"dim": 2}, "sweep": [8, 16, 32],
///   "metric": "max_betweenness", "seed": 1, "out": "runs/lattice"}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    #[serde(flatten)]
    pub family: Family,
    pub sweep: Vec<f64>,
    pub metric: Metric,
    #[serde(default = "default_seed")]
    pub seed: u64,
    /// Output directory for `results.csv`, `fit.json` and `plot.dat`.
    #[serde(default)]
    pub out: Option<PathBuf>,
    /// Vertex budget for discrete sweeps.
    #[serde(default)]
    pub budget: Option<usize>,
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self, ExperimentError> {
        let cfg: Self = serde_json::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), ExperimentError> {
        if self.sweep.is_empty() {
            return Err(ExperimentError::InvalidSweep("sweep is empty".into()));
        }
        let discrete = !matches!(self.family, Family::Continuum(_));
        if discrete != (self.metric == Metric::MaxBetweenness) {
            return Err(ExperimentError::InvalidConfig(format!(
                "metric {} does not apply to this family",
                self.metric.name()
            )));
        }
        if discrete && self.sweep.iter().any(|&x| x.fract() != 0.0 || x < 1.0) {
            return Err(ExperimentError::InvalidSweep("graph sweeps take positive integers".into()));
        }
        if let Family::Continuum(p) = &self.family {
            if p.domain == Domain::WholeSphere && (p.space != CurvatureClass::Positive || self.metric == Metric::Phi) {
                return Err(ExperimentError::InvalidConfig(
                    "the whole-sphere domain needs positive curvature and metric lambda or mu".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn is_discrete(&self) -> bool {
        !matches!(self.family, Family::Continuum(_))
    }
}

fn build(family: &Family, size: usize) -> Result<WeightedGraph, ExperimentError> {
    Ok(match *family {
        Family::RingGrowth { valence } => ring_growth(RingGrowthSpec { valence, layers: size })?.graph,
        Family::Lattice { dim } => lattice(LatticeSpec { dim, side: size })?,
        Family::Continuum(_) => return Err(ExperimentError::InvalidConfig("not a graph family".into())),
    })
}

/// Builds each graph of the sweep and fits `max beta_c` against `N`.
pub fn discrete_scaling(cfg: &ExperimentConfig) -> Result<ScalingFit, ExperimentError> {
    cfg.validate()?;
    if !cfg.is_discrete() {
        return Err(ExperimentError::InvalidConfig("discrete scaling needs a graph family".into()));
    }
    let budget = cfg.budget.unwrap_or(DEFAULT_BUDGET);
    let graphs = cfg
        .sweep
        .iter()
        .map(|&s| {
            let g = build(&cfg.family, s as usize)?;
            if g.vertex_count() > budget {
                return Err(ExperimentError::BudgetExceeded { size: g.vertex_count(), budget });
            }
            Ok(g)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let points = graphs
        .par_iter()
        .map(|g| Ok((g.vertex_count() as f64, max_betweenness(g)?)))
        .collect::<Result<Vec<_>, ExperimentError>>()?;
    ScalingFit::new(points)
}

fn continuum_point(p: &ContinuumParams, metric: Metric, radius: f64) -> Result<f64, ContinuumError> {
    let value = match p.domain {
        Domain::Ball => {
            let space = p.space();
            match metric {
                Metric::Lambda => lambda_ball(BallConfig { space, outer: radius, r: p.r, rho: p.rho })?,
                Metric::Mu => mu_density(space, radius, p.a)?,
                _ => continuum_inertia(space, radius, p.a, p.p)?,
            }
        }
        Domain::WholeSphere => {
            let space = SpaceSpec::spherical(p.n, 1.0 / radius);
            match metric {
                Metric::Lambda => lambda_whole_sphere(space, p.r)?,
                _ => mu_density_whole_sphere(space, p.a)?,
            }
        }
    };
    Ok(value.value)
}

/// Evaluates the continuum metric at each radius of the sweep and fits it
/// against the radius.
pub fn continuum_scaling(cfg: &ExperimentConfig) -> Result<ScalingFit, ExperimentError> {
    cfg.validate()?;
    let Family::Continuum(params) = &cfg.family else {
        return Err(ExperimentError::InvalidConfig("continuum scaling needs a continuum family".into()));
    };
    let points = cfg
        .sweep
        .par_iter()
        .map(|&radius| Ok((radius, continuum_point(params, cfg.metric, radius)?)))
        .collect::<Result<Vec<_>, ExperimentError>>()?;
    ScalingFit::new(points)
}

/// Runs whichever sweep the config describes.
pub fn run_scaling(cfg: &ExperimentConfig) -> Result<ScalingFit, ExperimentError> {
    if cfg.is_discrete() {
        discrete_scaling(cfg)
    } else {
        continuum_scaling(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_families() {
        let cfg = ExperimentConfig::from_json(
            r#"{"family": "ring_growth", "params": {"valence": 7}, "sweep": [2, 3, 4],
                "metric": "max_betweenness", "seed": 3, "out": "runs/x"}"#,
        )
        .unwrap();
        assert_eq!(cfg.family, Family::RingGrowth { valence: 7 });
        assert_eq!(cfg.seed, 3);
        let cfg = ExperimentConfig::from_json(
            r#"{"family": "continuum", "params": {"space": "hyp", "n": 2}, "sweep": [6, 8], "metric": "lambda"}"#,
        )
        .unwrap();
        let Family::Continuum(p) = cfg.family else { panic!() };
        assert_eq!((p.space, p.k, p.r, p.domain), (CurvatureClass::Negative, 1.0, 1.0, Domain::Ball));
        assert_eq!(cfg.out, None);
    }

    #[test]
    fn rejects_mismatches() {
        let bad = [
            r#"{"family": "lattice", "params": {"dim": 2}, "sweep": [4, 8], "metric": "lambda"}"#,
            r#"{"family": "lattice", "params": {"dim": 2}, "sweep": [], "metric": "max_betweenness"}"#,
            r#"{"family": "lattice", "params": {"dim": 2}, "sweep": [2.5], "metric": "max_betweenness"}"#,
            r#"{"family": "continuum", "params": {"space": "euc", "n": 2}, "sweep": [1], "metric": "max_beta_c"}"#,
            r#"{"family": "continuum", "params": {"space": "euc", "n": 2, "domain": "whole_sphere"}, "sweep": [1], "metric": "mu"}"#,
            r#"{"family": "torus", "params": {}, "sweep": [1], "metric": "mu"}"#,
        ];
        for text in bad {
            assert!(ExperimentConfig::from_json(text).is_err(), "{text}");
        }
    }

    #[test]
    fn path_maxima_are_exact() {
        let cfg = ExperimentConfig::from_json(
            r#"{"family": "lattice", "params": {"dim": 1}, "sweep": [5, 8, 11], "metric": "max_betweenness"}"#,
        )
        .unwrap();
        let fit = discrete_scaling(&cfg).unwrap();
        for &(n, beta) in &fit.points {
            let n = n as usize;
            let i = (n - 1) / 2;
            assert_eq!(beta, (2 * (i * (n - 1 - i) + n - 1)) as f64);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let mut cfg = ExperimentConfig::from_json(
            r#"{"family": "lattice", "params": {"dim": 2}, "sweep": [4, 6, 30], "metric": "max_betweenness"}"#,
        )
        .unwrap();
        cfg.budget = Some(100);
        assert!(matches!(discrete_scaling(&cfg), Err(ExperimentError::BudgetExceeded { size: 900, budget: 100 })));
    }

    #[test]
    fn flat_load_decays_like_one_over_r() {
        let cfg = ExperimentConfig::from_json(
            r#"{"family": "continuum", "params": {"space": "euc", "n": 2}, "sweep": [10, 20, 40], "metric": "lambda"}"#,
        )
        .unwrap();
        let fit = continuum_scaling(&cfg).unwrap();
        assert!((fit.slope + 1.0).abs() < 0.05, "{}", fit.slope);
    }

    #[test]
    fn whole_sphere_sweep() {
        let cfg = ExperimentConfig::from_json(
            r#"{"family": "continuum", "params": {"space": "sph", "n": 2, "domain": "whole_sphere"},
                "sweep": [5, 10, 20], "metric": "mu"}"#,
        )
        .unwrap();
        let fit = continuum_scaling(&cfg).unwrap();
        assert!((fit.slope + 1.0).abs() < 1e-9);
    }
}
