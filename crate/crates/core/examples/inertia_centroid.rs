//! Moment of inertia, the centroid, and how an appendix drags the centroid
//! off the symmetric centre.
//!
//! `cargo run --example inertia_centroid`

use congestion::generators::{attach_appendix, ring_growth, RingGrowthSpec};
use congestion::geometry::{congestion_inertia_report, graph_inertia};
use congestion::graph::{compute_geodesics, vertex_traffic, Demand, WeightedGraph};

fn describe(name: &str, g: &WeightedGraph) -> Result<(), Box<dyn std::error::Error>> {
    let gd = compute_geodesics(g)?;
    let phi = graph_inertia(&gd, 2.0);
    let tau = vertex_traffic(&gd, &Demand::Uniform)?;
    let r = congestion_inertia_report(&tau, &phi, &gd);
    println!("{name}: N={}", g.vertex_count());
    println!("  centroid {:?} with phi = {}", phi.centroid, phi.min());
    println!("  argmax tau {:?}, distance to centroid {}", r.max_traffic, r.distance);
    println!("  spikiness {:.2}, rank correlation {:?}", r.spikiness, r.rank_correlation);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = ring_growth(RingGrowthSpec { valence: 7, layers: 2 })?.graph;
    describe("d=7, 2 layers", &g)?;
    // Vertex 8 sits on the outer ring; a long tail there pulls the centroid over.
    let tailed = attach_appendix(&g, 8, 40)?;
    describe("same with a 40-edge appendix at vertex 8", &tailed)?;
    Ok(())
}
