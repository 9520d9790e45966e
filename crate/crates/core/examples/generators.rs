//! Builds ring-growth triangulations and lattices and writes them in the
//! edge-list and embedding text formats.
//!
//! `cargo run --example generators`

use congestion::generators::{attach_appendix_embedded, lattice, ring_growth, LatticeSpec, RingGrowthSpec};
use congestion::graph::io::{parse_edge_list, write_edge_list};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for valence in 5..=8 {
        let sizes: Vec<usize> = (1..=4)
            .map_while(|layers| ring_growth(RingGrowthSpec { valence, layers }).ok())
            .map(|r| r.graph.vertex_count())
            .collect();
        println!("valence {valence}: vertices per layer count {sizes:?}");
    }

    let r = ring_growth(RingGrowthSpec { valence: 7, layers: 1 })?;
    let (g, emb) = attach_appendix_embedded(&r.graph, &r.embedding, 3, 2)?;
    let text = write_edge_list(&g, &["d=7, one layer, appendix of 2 at vertex 3".to_string()]);
    print!("{text}");
    print!("{}", emb.to_text(&g, &[]));
    assert_eq!(parse_edge_list(&text)?.labeled_edges(), g.labeled_edges());

    let grid = lattice(LatticeSpec { dim: 3, side: 3 })?;
    println!("3x3x3 lattice: {} vertices, {} edges", grid.vertex_count(), grid.edge_count());
    Ok(())
}
