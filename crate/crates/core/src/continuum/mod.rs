//! Geodesic densities, ball loads and inertia in constant-curvature spaces of
//! curvature `-k^2`, `0` or `+k^2`.
//!
//! All computations run in units where `k = 1` and rescale at the end, so a
//! hyperbolic space of curvature `-4` at radius `R` behaves like curvature
//! `-1` at radius `2R`.

mod density;
mod exit;
mod monte_carlo;

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::quadrature::QuadratureNotConverged;

pub use density::{
    continuum_inertia, lambda_ball, lambda_whole_sphere, mu_density, mu_density_whole_sphere, DensityValue,
};
pub use exit::{exit_length, full_chord, hyperbolic_chord_closed_form};
pub use monte_carlo::{mc_transit, MCEstimate};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ContinuumError {
    #[error("invalid space: {0}")]
    InvalidSpace(String),
    #[error("radius {radius} is outside (0, {limit})")]
    RadiusOutOfRange { radius: f64, limit: f64 },
    #[error("base point at distance {a} is not inside the ball of radius {radius}")]
    PointOutsideBall { a: f64, radius: f64 },
    #[error("direction angle {0} is outside [0, pi]")]
    AngleOutOfRange(f64),
    #[error("inner ball (r = {r}, offset {rho}) is not contained in the ball of radius {radius}")]
    BallNotContained { radius: f64, r: f64, rho: f64 },
    #[error("off-centre balls need dimension 2, got {0}")]
    UnsupportedDimension(usize),
    #[error("need at least 1000 samples, got {0}")]
    BadSampleCount(usize),
    #[error("exponent must be finite and non-negative, got {0}")]
    InvalidExponent(f64),
    #[error(transparent)]
    QuadratureNotConverged(#[from] QuadratureNotConverged),
}

/// Sign of the sectional curvature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CurvatureClass {
    #[serde(alias = "hyp")]
    Negative,
    #[serde(alias = "euc")]
    Zero,
    #[serde(alias = "sph")]
    Positive,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpaceSpec {
    pub dimension: usize,
    pub class: CurvatureClass,
    /// Curvature scale; ignored for [`CurvatureClass::Zero`].
    pub k: f64,
}

impl SpaceSpec {
    pub fn hyperbolic(dimension: usize, k: f64) -> Self {
        Self { dimension, class: CurvatureClass::Negative, k }
    }

    pub fn euclidean(dimension: usize) -> Self {
        Self { dimension, class: CurvatureClass::Zero, k: 1.0 }
    }

    pub fn spherical(dimension: usize, k: f64) -> Self {
        Self { dimension, class: CurvatureClass::Positive, k }
    }

    pub fn validate(&self) -> Result<(), ContinuumError> {
        if self.dimension < 2 {
            return Err(ContinuumError::InvalidSpace(format!("dimension must be at least 2, got {}", self.dimension)));
        }
        if self.class != CurvatureClass::Zero && !(self.k.is_finite() && self.k > 0.0) {
            return Err(ContinuumError::InvalidSpace(format!("k must be positive, got {}", self.k)));
        }
        Ok(())
    }

    /// Length scale `1/k` (1 for flat space).
    pub(crate) fn unit(&self) -> f64 {
        match self.class {
            CurvatureClass::Zero => 1.0,
            _ => 1.0 / self.k,
        }
    }

    /// `sh_k(x)` in units where `k = 1`.
    pub(crate) fn sh_unit(&self, x: f64) -> f64 {
        match self.class {
            CurvatureClass::Negative => x.sinh(),
            CurvatureClass::Zero => x,
            CurvatureClass::Positive => x.sin(),
        }
    }

    /// `sh_k(x) = sinh(kx)/k`, `x`, or `sin(kx)/k`.
    pub fn sh(&self, x: f64) -> f64 {
        self.unit() * self.sh_unit(x / self.unit())
    }

    /// Largest ball radius (exclusive) for which a ball is a proper ball.
    pub(crate) fn radius_limit(&self) -> f64 {
        match self.class {
            CurvatureClass::Positive => PI / self.k,
            _ => f64::INFINITY,
        }
    }

    /// Largest radius (inclusive) for which the ball is convex, so that every
    /// pair of its points is joined by one minimizing geodesic inside it.
    pub(crate) fn convex_limit(&self) -> f64 {
        match self.class {
            CurvatureClass::Positive => PI / (2.0 * self.k),
            _ => f64::INFINITY,
        }
    }

    pub(crate) fn check_radius(&self, radius: f64) -> Result<(), ContinuumError> {
        self.validate()?;
        let limit = self.radius_limit();
        if !(radius > 0.0 && radius < limit) {
            return Err(ContinuumError::RadiusOutOfRange { radius, limit });
        }
        Ok(())
    }

    pub(crate) fn check_convex_radius(&self, radius: f64) -> Result<(), ContinuumError> {
        self.check_radius(radius)?;
        let limit = self.convex_limit();
        if radius > limit * (1.0 + 1e-12) {
            return Err(ContinuumError::RadiusOutOfRange { radius, limit });
        }
        Ok(())
    }
}

/// Volume of the unit sphere `S^m` (so `S^1` has length `2 pi`).
pub fn sphere_volume(m: usize) -> f64 {
    match m {
        0 => 2.0,
        1 => 2.0 * PI,
        _ => 2.0 * PI / (m as f64 - 1.0) * sphere_volume(m - 2),
    }
}

/// `int_0^x sh(t)^m dt` in `k = 1` units, by the reduction formula.
pub(crate) fn sh_power_integral(class: CurvatureClass, m: usize, x: f64) -> f64 {
    match (class, m) {
        (_, 0) => x,
        (CurvatureClass::Zero, _) => x.powi(m as i32 + 1) / (m as f64 + 1.0),
        (CurvatureClass::Negative, 1) => 2.0 * (0.5 * x).sinh().powi(2),
        (CurvatureClass::Positive, 1) => 2.0 * (0.5 * x).sin().powi(2),
        (CurvatureClass::Negative, _) => {
            let mf = m as f64;
            x.sinh().powi(m as i32 - 1) * x.cosh() / mf - (mf - 1.0) / mf * sh_power_integral(class, m - 2, x)
        }
        (CurvatureClass::Positive, _) => {
            let mf = m as f64;
            -x.sin().powi(m as i32 - 1) * x.cos() / mf + (mf - 1.0) / mf * sh_power_integral(class, m - 2, x)
        }
    }
}

/// Volume of a geodesic ball of radius `radius`.
pub fn ball_volume(space: SpaceSpec, radius: f64) -> Result<f64, ContinuumError> {
    space.check_radius(radius)?;
    let n = space.dimension;
    let u = space.unit();
    Ok(sphere_volume(n - 1) * sh_power_integral(space.class, n - 1, radius / u) * u.powi(n as i32))
}

/// A ball `B_r(c)` inside `B_R(0)` with `|c| = rho`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BallConfig {
    pub space: SpaceSpec,
    #[serde(rename = "R")]
    pub outer: f64,
    pub r: f64,
    pub rho: f64,
}

impl BallConfig {
    pub fn concentric(space: SpaceSpec, outer: f64, r: f64) -> Self {
        Self { space, outer, r, rho: 0.0 }
    }

    pub fn validate(&self) -> Result<(), ContinuumError> {
        self.space.check_convex_radius(self.outer)?;
        let contained = self.r > 0.0 && self.rho >= 0.0 && self.rho + self.r <= self.outer * (1.0 + 1e-12);
        if !contained {
            return Err(ContinuumError::BallNotContained { radius: self.outer, r: self.r, rho: self.rho });
        }
        if self.rho > 0.0 && self.space.dimension != 2 {
            return Err(ContinuumError::UnsupportedDimension(self.space.dimension));
        }
        Ok(())
    }
}
