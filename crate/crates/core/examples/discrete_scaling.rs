//! How the maximum betweenness grows with graph size: roughly `N^2` on
//! negatively curved triangulations against `N^1.5` on a flat grid.
//!
//! `cargo run --release --example discrete_scaling`

use congestion::experiments::{run_scaling, ExperimentConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let runs = [
        r#"{"family": "ring_growth", "params": {"valence": 7}, "sweep": [3, 4, 5, 6], "metric": "max_betweenness"}"#,
        r#"{"family": "lattice", "params": {"dim": 2}, "sweep": [8, 12, 16, 24, 32], "metric": "max_betweenness"}"#,
    ];
    for json in runs {
        let cfg = ExperimentConfig::from_json(json)?;
        let fit = run_scaling(&cfg)?;
        println!("{:?}", cfg.family);
        for (n, beta) in &fit.points {
            println!("  N={n:>6}  max beta_c={beta:.1}");
        }
        println!("  slope {:.4}, r^2 {:.5}", fit.slope, fit.r_squared);
    }
    Ok(())
}
