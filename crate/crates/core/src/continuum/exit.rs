use std::f64::consts::PI;

use super::{ContinuumError, CurvatureClass, SpaceSpec};

pub(crate) fn check_point(space: &SpaceSpec, radius: f64, a: f64) -> Result<(), ContinuumError> {
    space.check_radius(radius)?;
    if !(a >= 0.0 && a < radius) {
        return Err(ContinuumError::PointOutsideBall { a, radius });
    }
    Ok(())
}

/// Exit length in `k = 1` units with `x = ka`, `big = kR`. No validation.
pub(crate) fn exit_unit(class: CurvatureClass, big: f64, x: f64, theta: f64) -> f64 {
    let (s, c) = theta.sin_cos();
    match class {
        CurvatureClass::Zero => {
            let root = (big * big - x * x * s * s).max(0.0).sqrt();
            if c > 0.0 {
                (big - x) * (big + x) / (x * c + root)
            } else {
                root - x * c
            }
        }
        CurvatureClass::Negative => {
            // cosh R = A cosh e + B sinh e with A = cosh a, B = sinh a cos(theta)
            let disc = ((big.sinh() - x.sinh() * s) * (big.sinh() + x.sinh() * s)).max(0.0);
            let a_plus_b = 2.0 * (0.5 * theta).cos().powi(2) * x.cosh() - (-x).exp() * c;
            (big.cosh() + disc.sqrt()).ln() - a_plus_b.ln()
        }
        CurvatureClass::Positive => {
            // cos R = A cos e + B sin e with A = cos a, B = -sin a cos(theta)
            let (aa, bb) = (x.cos(), -x.sin() * c);
            let rho = aa.hypot(bb);
            bb.atan2(aa) + (big.cos() / rho).clamp(-1.0, 1.0).acos()
        }
    }
}

/// Distance from a point at distance `a` from the centre of `B_R(0)` to the
/// boundary, along the geodesic leaving at angle `theta` from the outward
/// radial direction. `theta = 0` gives `R - a` and `theta = pi` gives `R + a`.
pub fn exit_length(space: SpaceSpec, radius: f64, a: f64, theta: f64) -> Result<f64, ContinuumError> {
    check_point(&space, radius, a)?;
    if !(0.0..=PI).contains(&theta) {
        return Err(ContinuumError::AngleOutOfRange(theta));
    }
    let u = space.unit();
    Ok(u * exit_unit(space.class, radius / u, a / u, theta))
}

/// Length of the whole chord of `B_R(0)` through the base point in direction
/// `theta`: `e(theta) + e(pi - theta)`.
pub fn full_chord(space: SpaceSpec, radius: f64, a: f64, theta: f64) -> Result<f64, ContinuumError> {
    Ok(exit_length(space, radius, a, theta)? + exit_length(space, radius, a, PI - theta)?)
}

/// Chord length in the curvature `-1` plane from the right-triangle relation
/// `cosh(chord / 2) = cosh R / sqrt(1 + sinh^2 a sin^2 theta)`.
pub fn hyperbolic_chord_closed_form(radius: f64, a: f64, theta: f64) -> f64 {
    let perp = (a.sinh() * theta.sin()).asinh();
    2.0 * (radius.cosh() / perp.cosh()).max(1.0).acosh()
}
