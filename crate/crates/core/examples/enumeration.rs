//! Isomorph-free enumeration: class counts, a partitioned parallel run, and the cache.
//!
//! cargo run --release --example enumeration

use kitespec::enumeration::{enumerate, enumerate_cached, enumerate_parallel, EnumConstraints};

fn main() -> kitespec::Result<()> {
    for n in 1..=8 {
        let all = enumerate(&EnumConstraints::all(n))?.count();
        let connected = enumerate(&EnumConstraints::connected(n))?.count();
        println!("n={n}: {all:>6} graphs, {connected:>6} connected");
    }
    let c = EnumConstraints::all(9).with_edges(23);
    let graphs = enumerate_parallel(&c, 4)?;
    println!("n=9 m=23: {} classes (4 partitions)", graphs.len());

    let dir = std::env::temp_dir().join("kitespec-example-cache");
    let c = EnumConstraints::connected(7);
    let first = enumerate_cached(&c, Some(&dir), 2)?;
    let again = enumerate_cached(&c, Some(&dir), 2)?;
    assert_eq!(first, again);
    println!("connected n=7: {} classes, cached under {}", first.len(), dir.display());
    Ok(())
}
