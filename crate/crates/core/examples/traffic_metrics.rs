//! Edge and vertex traffic on a small weighted graph, under uniform demand
//! and under a demand matrix.
//!
//! `cargo run --example traffic_metrics`

use congestion::graph::{build_graph, compute_geodesics, star, subgraph_load, vertex_traffic, Demand};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // A square with one diagonal, so some pairs have two geodesics.
    let g = build_graph(&[(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 0, 1.0), (0, 2, 1.5)])?;
    let gd = compute_geodesics(&g)?;

    let uniform = vertex_traffic(&gd, &Demand::Uniform)?;
    println!("vertex  beta_c  tau");
    for v in 0..g.vertex_count() {
        println!("{:>6}  {:>6.3}  {:>6.3}", g.label(v), uniform.betweenness[v], uniform.vertex_rate[v]);
    }
    let (worst, residual) = uniform.identity_residual(&Demand::Uniform);
    println!("tau = 2 beta_c - 2(N-1) holds to {residual:.1e} (worst at vertex {worst})");

    for (i, e) in g.edges().iter().enumerate() {
        println!("edge {i} ({}-{}, l={}): tau = {:.3}", e.u, e.v, e.weight, uniform.edge_rate[i]);
    }

    // Everything leaves vertex 0.
    let dem = Demand::single_source(g.vertex_count(), 0);
    let s = star(&g, 0)?;
    let load = subgraph_load(&gd, &dem, &s.endpoints(&g))?;
    let tau0 = vertex_traffic(&gd, &dem)?.vertex_rate[0];
    println!("single source: load on star(0) = {load:.3} <= l(star) * tau(0) = {:.3}", s.length * tau0);
    Ok(())
}
