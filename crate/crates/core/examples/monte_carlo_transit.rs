//! Cross-checks quadrature against sampling: draws uniform point pairs in a
//! disk and measures how much of their geodesic lies in a smaller disk.
//!
//! `cargo run --release --example monte_carlo_transit`

use congestion::continuum::{lambda_ball, mc_transit, BallConfig, SpaceSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let configs = [
        BallConfig::concentric(SpaceSpec::hyperbolic(2, 1.0), 5.0, 1.0),
        BallConfig { space: SpaceSpec::euclidean(2), outer: 3.0, r: 1.0, rho: 1.5 },
        BallConfig { space: SpaceSpec::spherical(2, 1.0), outer: 1.5, r: 0.4, rho: 0.9 },
    ];
    for cfg in configs {
        let q = lambda_ball(cfg)?;
        let mc = mc_transit(cfg, 1_000_000, 7)?;
        let z = (mc.mean - q.value) / mc.stderr;
        println!(
            "{:?} R={} r={} rho={}: quadrature {:.6}, sampling {:.6} +- {:.6} (z = {z:+.2}), transit fraction {:.4}",
            cfg.space.class, cfg.outer, cfg.r, cfg.rho, q.value, mc.mean, mc.stderr, mc.transit_fraction
        );
    }

    // With the inner disk equal to the outer one, lambda is the mean distance.
    let disk = BallConfig::concentric(SpaceSpec::euclidean(2), 1.0, 1.0);
    let mc = mc_transit(disk, 1_000_000, 11)?;
    println!("mean distance in the unit disk: {:.5} +- {:.5} (128/45pi = {:.5})", mc.mean, mc.stderr, 128.0 / (45.0 * std::f64::consts::PI));
    Ok(())
}
