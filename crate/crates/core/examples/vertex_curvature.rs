//! Angular-defect curvature of the centre vertex of ring-growth
//! triangulations. Valence 5 closes up into an icosahedron, 6 is flat and
//! 7 or more is negatively curved.
//!
//! `cargo run --example vertex_curvature`

use congestion::generators::{ring_growth, RingGrowthSpec};
use congestion::geometry::vertex_curvature;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for valence in 5..=8 {
        let r = ring_growth(RingGrowthSpec { valence, layers: 2 })?;
        let c = vertex_curvature(&r.graph, &r.embedding, 0)?;
        println!(
            "d={valence}: N={:>3}  angle sum={:.4}  area={:.4}  kappa={:+.6}",
            r.graph.vertex_count(),
            c.angle_sum(),
            c.total_area(),
            c.kappa
        );
    }
    Ok(())
}
