//! Builds the named families from descriptors and round-trips them through graph6.
//!
//! cargo run --example graph_families -- kite:5,3 gc:4

use kitespec::cli::GraphSpec;
use kitespec::graph::decode_graph6;

fn main() -> kitespec::Result<()> {
    let mut specs: Vec<String> = std::env::args().skip(1).collect();
    if specs.is_empty() {
        specs = ["kite:4,2", "path:5", "complete:4", "knm:5,4", "gb:4", "gc:4", "g6:DBW"]
            .map(String::from)
            .to_vec();
    }
    for raw in &specs {
        let spec: GraphSpec = raw.parse()?;
        let g = spec.build()?;
        let g6 = g.to_string();
        assert_eq!(decode_graph6(g6.as_bytes())?, g);
        let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
        println!("{raw:<12} {g6:<10} n={:<2} m={:<3} {}", g.order(), g.edge_count(), edges.join(" "));
    }
    // descriptor errors point at the offending byte
    if let Err(e) = "kite:3,x".parse::<GraphSpec>() {
        println!("kite:3,x     -> {e}");
    }
    Ok(())
}
