//! Where traffic peaks compared with where inertia is least, across
//! valences 6, 7, 8 and a square lattice of similar size.
//!
//! `cargo run --release --example conjecture_report`

use congestion::experiments::conjecture_report;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:<24} {:>5} {:>9} {:>10} {:>8}", "graph", "N", "distance", "spikiness", "spearman");
    for row in conjecture_report(600)? {
        let rho = row.rank_correlation.map_or("-".to_string(), |r| format!("{r:.3}"));
        println!("{:<24} {:>5} {:>9} {:>10.2} {:>8}", row.name, row.vertices, row.distance, row.spikiness, rho);
    }
    Ok(())
}
