//! Thin-triangle constant of a tree, a cycle, a flat lattice and a
//! negatively curved triangulation.
//!
//! `cargo run --release --example gromov_delta`

use congestion::generators::{lattice, ring_growth, LatticeSpec, RingGrowthSpec};
use congestion::geometry::{gromov_delta, TripleSampling};
use congestion::graph::{build_graph, compute_geodesics, WeightedGraph};

fn report(name: &str, g: &WeightedGraph) -> Result<(), Box<dyn std::error::Error>> {
    let gd = compute_geodesics(g)?;
    let est = gromov_delta(&gd, TripleSampling::default())?;
    let how = if est.exhaustive { "all" } else { "sampled" };
    println!("{name:<18} N={:>4}  delta={:>5}  ({} {how} triples)", g.vertex_count(), est.delta, est.triples);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let tree = build_graph(&[(0, 1, 1.0), (1, 2, 1.0), (1, 3, 1.0), (3, 4, 1.0), (3, 5, 1.0)])?;
    report("tree", &tree)?;
    let cycle: Vec<(u64, u64, f64)> = (0..12).map(|i| (i, (i + 1) % 12, 1.0)).collect();
    report("12-cycle", &build_graph(&cycle)?)?;
    report("lattice 12x12", &lattice(LatticeSpec { dim: 2, side: 12 })?)?;
    report("ring growth d=7", &ring_growth(RingGrowthSpec { valence: 7, layers: 4 })?.graph)?;
    Ok(())
}
