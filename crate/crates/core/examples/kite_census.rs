//! Checks that kites of the same order never share a characteristic polynomial.
//!
//! cargo run --release --example kite_census -- 24

use kitespec::das::verify_theorem31;

fn main() -> kitespec::Result<()> {
    let n_max = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(14);
    let report = verify_theorem31(n_max)?;
    for row in &report.rows {
        let kites: Vec<String> = row.kites.iter().map(|k| format!("({},{})", k.p, k.q)).collect();
        println!("n={:<3} distinct={:<5} {}", row.n, row.all_distinct, kites.join(" "));
    }
    println!("collisions: {}", report.collisions);
    Ok(())
}
