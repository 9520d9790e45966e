//! Geodesic density `mu`, normalized load `lambda` and continuum inertia in
//! the three constant-curvature planes.
//!
//! `cargo run --release --example continuum_density`

use std::f64::consts::PI;

use congestion::continuum::{continuum_inertia, lambda_ball, mu_density, BallConfig, SpaceSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let r = 3.0;
    let hyp = SpaceSpec::hyperbolic(2, 1.0);
    let mu0 = mu_density(hyp, r, 0.0)?;
    let vol = 2.0 * PI * (r.cosh() - 1.0);
    let exact = 2.0 * PI * ((2.0 * r).sinh() - 2.0 * r.sinh()) / (vol * vol);
    println!("hyperbolic R=3: mu(0) = {:.10} (closed form {exact:.10})", mu0.value);
    for a in [0.0, 0.5, 1.0, 1.5, 2.0, 2.5] {
        println!("  mu({a}) = {:.6}", mu_density(hyp, r, a)?.value);
    }

    println!("lambda of the unit ball at the centre of B_R:");
    for (name, space, outer) in [
        ("hyperbolic", hyp, 8.0),
        ("euclidean", SpaceSpec::euclidean(2), 8.0),
        ("spherical", SpaceSpec::spherical(2, 1.0), 1.5),
    ] {
        let l = lambda_ball(BallConfig::concentric(space, outer, 1.0))?;
        println!("  {name:<10} R={outer}: {:.8} +- {:.1e}", l.value, l.error);
    }

    let e2 = SpaceSpec::euclidean(2);
    println!("euclidean disk R=2, phi^(2)(a):");
    for a in [0.0, 0.5, 1.0, 1.5] {
        println!("  a={a}: {:.6}", continuum_inertia(e2, 2.0, a, 2.0)?.value);
    }
    Ok(())
}
