use std::cell::{Cell, RefCell};
use std::f64::consts::{FRAC_PI_2, PI};

use serde::Serialize;

use super::exit::{check_point, exit_unit};
use super::{sh_power_integral, sphere_volume, BallConfig, ContinuumError, CurvatureClass, SpaceSpec};
use crate::quadrature::{integrate, integrate_pieces, Integral, QuadratureNotConverged, Tolerance};

const OUTER: Tolerance = Tolerance::relative(1e-8);
const MIDDLE: Tolerance = Tolerance::relative(1e-10);
const INNER: Tolerance = Tolerance::relative(1e-12);

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DensityValue {
    pub value: f64,
    /// Absolute error estimate.
    pub error: f64,
    /// Integrand evaluations across all nesting levels.
    pub evaluations: usize,
}

/// Runs an integral whose integrand itself integrates. Inner failures are
/// recorded and turned into NaN so the outer loop stops early.
struct Nested {
    failure: RefCell<Option<QuadratureNotConverged>>,
    evaluations: Cell<usize>,
    inner_error: Cell<f64>,
}

impl Nested {
    fn new() -> Self {
        Self { failure: RefCell::new(None), evaluations: Cell::new(0), inner_error: Cell::new(0.0) }
    }

    fn take(&self, r: Result<Integral, QuadratureNotConverged>) -> f64 {
        match r {
            Ok(i) => {
                self.evaluations.set(self.evaluations.get() + i.evaluations);
                self.inner_error.set(self.inner_error.get().max(i.error / i.value.abs().max(f64::MIN_POSITIVE)));
                i.value
            }
            Err(e) => {
                self.failure.borrow_mut().get_or_insert(e);
                f64::NAN
            }
        }
    }

    fn take_density(&self, r: Result<DensityValue, ContinuumError>) -> f64 {
        match r {
            Ok(d) => self.take(Ok(Integral { value: d.value, error: d.error, evaluations: d.evaluations })),
            Err(ContinuumError::QuadratureNotConverged(e)) => self.take(Err(e)),
            Err(_) => f64::NAN,
        }
    }

    fn finish(self, outer: Result<Integral, QuadratureNotConverged>) -> Result<DensityValue, ContinuumError> {
        if let Some(e) = self.failure.into_inner() {
            return Err(e.into());
        }
        let outer = outer?;
        Ok(DensityValue {
            value: outer.value,
            error: outer.error + self.inner_error.get() * outer.value.abs(),
            evaluations: outer.evaluations + self.evaluations.get(),
        })
    }
}

/// `int sh(u)^m * min(u, e1, e2, e1 + e2 - u) du` over `0 <= u <= min(e1 + e2, cap)`:
/// the `(x, y)` double integral over `[0, e1] x [0, e2]` of `sh(x + y)^m`.
fn overlap_integral(
    class: CurvatureClass,
    m: usize,
    e1: f64,
    e2: f64,
    cap: f64,
) -> Result<Integral, QuadratureNotConverged> {
    let (lo, hi) = (e1.min(e2), e1.max(e2));
    let end = e1 + e2;
    let sh = |u: f64| match class {
        CurvatureClass::Negative => u.sinh(),
        CurvatureClass::Zero => u,
        CurvatureClass::Positive => u.sin(),
    };
    let f = |u: f64| sh(u).powi(m as i32) * u.min(lo).min(end - u);
    let mut breaks: Vec<f64> = [0.0, lo, hi, end].into_iter().map(|b| b.min(cap)).collect();
    breaks.dedup();
    integrate_pieces(f, &breaks, INNER)
}

fn angular_weight(n: usize, theta: f64) -> f64 {
    if n == 2 {
        sphere_volume(0)
    } else {
        sphere_volume(n - 2) * theta.sin().powi(n as i32 - 2)
    }
}

/// The density in `k = 1` units, given an exit-length function and the
/// domain volume.
fn mu_unit<E: Fn(f64) -> f64>(
    class: CurvatureClass,
    n: usize,
    exit: E,
    cap: f64,
    volume: f64,
) -> Result<DensityValue, ContinuumError> {
    let nested = Nested::new();
    // the integrand is symmetric under theta -> pi - theta
    let outer = integrate(
        |theta| {
            let inner = nested.take(overlap_integral(class, n - 1, exit(theta), exit(PI - theta), cap));
            angular_weight(n, theta) * inner
        },
        0.0,
        FRAC_PI_2,
        MIDDLE,
    );
    let scale = 2.0 / (volume * volume);
    nested.finish(outer.map(|i| i.scale(scale)))
}

fn unit_volume(space: &SpaceSpec, big: f64) -> f64 {
    let n = space.dimension;
    sphere_volume(n - 1) * sh_power_integral(space.class, n - 1, big)
}

fn mu_scaled(space: &SpaceSpec, big: f64, x: f64) -> Result<DensityValue, ContinuumError> {
    let n = space.dimension;
    let cap = if space.class == CurvatureClass::Positive { PI } else { f64::INFINITY };
    mu_unit(space.class, n, |t| exit_unit(space.class, big, x, t), cap, unit_volume(space, big))
}

/// Rescales a unit-space value carrying length dimension `power`.
fn rescale(d: DensityValue, u: f64, power: f64) -> DensityValue {
    let c = u.powf(power);
    DensityValue { value: d.value * c, error: d.error * c, evaluations: d.evaluations }
}

/// Geodesic density at distance `a` from the centre of `B_R(0)`: the
/// normalized measure of point pairs of the ball whose geodesic passes
/// through the point.
pub fn mu_density(space: SpaceSpec, radius: f64, a: f64) -> Result<DensityValue, ContinuumError> {
    check_point(&space, radius, a)?;
    space.check_convex_radius(radius)?;
    let u = space.unit();
    let n = space.dimension as f64;
    Ok(rescale(mu_scaled(&space, radius / u, a / u)?, u, 1.0 - n))
}

/// Density on the whole positively curved sphere, with geodesics taken up to
/// the antipode. `a` is the base point's distance from a fixed pole and must
/// lie in `[0, pi/k)`.
pub fn mu_density_whole_sphere(space: SpaceSpec, a: f64) -> Result<DensityValue, ContinuumError> {
    space.validate()?;
    if space.class != CurvatureClass::Positive {
        return Err(ContinuumError::InvalidSpace("the whole-sphere domain needs positive curvature".into()));
    }
    let u = space.unit();
    if !(a >= 0.0 && a < PI * u) {
        return Err(ContinuumError::PointOutsideBall { a, radius: PI * u });
    }
    let n = space.dimension;
    // every geodesic from the base point runs distance pi before reaching the
    // antipode, whatever the base point
    let d = mu_unit(space.class, n, |_| PI, PI, sphere_volume(n))?;
    Ok(rescale(d, u, 1.0 - n as f64))
}

/// Normalized load of `B_r(0)` when the domain is the whole sphere, which
/// is the uniform density times the volume of the small ball.
pub fn lambda_whole_sphere(space: SpaceSpec, r: f64) -> Result<DensityValue, ContinuumError> {
    let volume = super::ball_volume(space, r)?;
    let mu = mu_density_whole_sphere(space, 0.0)?;
    Ok(DensityValue { value: mu.value * volume, error: mu.error * volume, evaluations: mu.evaluations })
}

/// Normalized traffic load of `B_r(c)` inside `B_R(0)`: the integral of the
/// density over the inner ball, done as a radial integral against the
/// measure of each centred sphere that falls inside it.
pub fn lambda_ball(cfg: BallConfig) -> Result<DensityValue, ContinuumError> {
    cfg.validate()?;
    let space = cfg.space;
    let u = space.unit();
    let (big, r, rho) = (cfg.outer / u, cfg.r / u, cfg.rho / u);
    let n = space.dimension;
    let mu = |x: f64| mu_scaled(&space, big, x.min(big * (1.0 - 1e-15)));
    let sh = |x: f64| space.sh_unit(x);
    let nested = Nested::new();

    let outer = if rho == 0.0 {
        let shell = sphere_volume(n - 1);
        integrate(|x| nested.take_density(mu(x)) * shell * sh(x).powi(n as i32 - 1), 0.0, r, OUTER)
    } else {
        let cap = |x: f64| -> f64 {
            let bound = match space.class {
                CurvatureClass::Zero => (x * x + rho * rho - r * r) / (2.0 * x * rho),
                CurvatureClass::Negative => (x.cosh() * rho.cosh() - r.cosh()) / (x.sinh() * rho.sinh()),
                CurvatureClass::Positive => (r.cos() - x.cos() * rho.cos()) / (x.sin() * rho.sin()),
            };
            bound.clamp(-1.0, 1.0).acos()
        };
        let full = if rho < r {
            integrate(|x| nested.take_density(mu(x)) * 2.0 * PI * sh(x), 0.0, r - rho, OUTER)
        } else {
            Ok(Integral::default())
        };
        // x = mid - half cos t smooths the square-root behaviour at both ends
        let (lo, hi) = ((rho - r).abs(), rho + r);
        let (mid, half) = (0.5 * (lo + hi), 0.5 * (hi - lo));
        let partial = integrate(
            |t| {
                let x = mid - half * t.cos();
                nested.take_density(mu(x)) * 2.0 * cap(x) * sh(x) * half * t.sin()
            },
            0.0,
            PI,
            OUTER,
        );
        full.and_then(|f| partial.map(|p| f + p))
    };
    Ok(rescale(nested.finish(outer)?, u, 1.0))
}

/// Moment of inertia `int_{B_R(0)} d(x, y)^p dy` about a point at distance
/// `a` from the centre, in geodesic polar coordinates about that point.
pub fn continuum_inertia(space: SpaceSpec, radius: f64, a: f64, p: f64) -> Result<DensityValue, ContinuumError> {
    check_point(&space, radius, a)?;
    space.check_convex_radius(radius)?;
    if !(p.is_finite() && p >= 0.0) {
        return Err(ContinuumError::InvalidExponent(p));
    }
    let u = space.unit();
    let (big, x) = (radius / u, a / u);
    let n = space.dimension;
    let nested = Nested::new();
    let outer = integrate(
        |theta| {
            let e = exit_unit(space.class, big, x, theta);
            let radial = integrate(|t| t.powf(p) * space.sh_unit(t).powi(n as i32 - 1), 0.0, e, INNER);
            angular_weight(n, theta) * nested.take(radial)
        },
        0.0,
        PI,
        OUTER,
    );
    Ok(rescale(nested.finish(outer)?, u, p + n as f64))
}
