//! Normalized load of the unit ball as the ambient ball grows: flat in the
//! hyperbolic plane, `R^-1` in the Euclidean plane, `R^-2` in flat 3-space.
//! The spherical run shrinks the curvature so the sphere itself grows.
//!
//! `cargo run --release --example continuum_scaling`

use congestion::experiments::{run_scaling, write_experiment_outputs, ExperimentConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let runs = [
        r#"{"family": "continuum", "params": {"space": "negative", "n": 2}, "sweep": [6, 8, 10, 12], "metric": "lambda"}"#,
        r#"{"family": "continuum", "params": {"space": "zero", "n": 2}, "sweep": [10, 20, 40, 80], "metric": "lambda"}"#,
        r#"{"family": "continuum", "params": {"space": "zero", "n": 3}, "sweep": [10, 20, 40], "metric": "lambda"}"#,
        r#"{"family": "continuum", "params": {"space": "positive", "n": 2, "domain": "whole_sphere"}, "sweep": [5, 10, 20, 40], "metric": "lambda"}"#,
    ];
    let dir = std::env::temp_dir().join("congestion-continuum-scaling");
    for (i, json) in runs.iter().enumerate() {
        let cfg = ExperimentConfig::from_json(json)?;
        let fit = run_scaling(&cfg)?;
        println!("run {i}: slope {:+.4} over {:?}", fit.slope, fit.points);
        write_experiment_outputs(&dir.join(format!("run{i}")), &[format!("example run {i}")], &cfg, &fit)?;
    }
    println!("results written under {}", dir.display());
    Ok(())
}
