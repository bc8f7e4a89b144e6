//! Finds every cospectral mate of a graph by exhaustive search over its (n, m) space.
//!
//! cargo run --release --example cospectral_mates -- knm:5,4

use kitespec::cli::GraphSpec;
use kitespec::das::{find_cospectral_mates, SearchOptions};

fn main() -> kitespec::Result<()> {
    let specs: Vec<String> = std::env::args().skip(1).collect();
    let specs = if specs.is_empty() {
        vec!["knm:5,4".into(), "path:6".into(), "kite:4,2".into(), "complete:4".into()]
    } else {
        specs
    };
    for raw in specs {
        let g = raw.parse::<GraphSpec>()?.build()?;
        let report = find_cospectral_mates(&g, &SearchOptions::default())?;
        println!(
            "{raw}: {} classes with n={} m={}, {} with t={}, verdict {}",
            report.classes_scanned,
            report.n,
            report.m,
            report.prefilter_survivors,
            report.t,
            report.verdict.as_str()
        );
        for mate in &report.mate_invariants {
            println!("    mate {} degrees {:?} connected={} charpoly {}", mate.graph6, mate.degree_sequence, mate.connected, mate.charpoly);
        }
    }
    Ok(())
}
