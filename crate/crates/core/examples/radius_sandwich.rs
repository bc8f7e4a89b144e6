//! Spectral radius of kites against the lower and upper bounds that depend on p only.

use kitespec::graph::make_kite;
use kitespec::spectral::{kite_radius_bounds, spectral_radius_estimate};
use kitespec::KiteParams;

fn main() -> kitespec::Result<()> {
    for p in 3..=10 {
        let b = kite_radius_bounds(p)?;
        print!("p={p:<2} [{:.6}, {:.6}]", b.lower, b.upper);
        for q in [1, 2, 5, 10] {
            let est = spectral_radius_estimate(&make_kite(KiteParams { p, q })?)?;
            let rho = est.value();
            assert!(b.lower < rho && rho < b.upper);
            print!("  q={q}: {rho:.8}");
        }
        println!();
    }
    Ok(())
}
