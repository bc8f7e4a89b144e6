//! Exact rational check of 2m(r-1)/r < (p - 1 + 1/p² + 1/p³)² over the whole
//! parameter range up to a given p.

use kitespec::spectral::verify_lemma41_inequality;

fn main() -> kitespec::Result<()> {
    let p_max = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(50);
    let report = verify_lemma41_inequality(p_max)?;
    println!("{} instances up to p = {p_max}, {} violations", report.checks.len(), report.violations);
    for c in report.checks.iter().filter(|c| c.p <= 9) {
        println!("  p={} q={} r={}: {} < {}", c.p, c.q, c.r, c.lhs_squared, c.rhs_squared);
    }
    Ok(())
}
