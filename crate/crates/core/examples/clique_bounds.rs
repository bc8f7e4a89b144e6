//! Clique number next to the spectral lower bound and the kite bound p - 2q + 1.

use kitespec::graph::{clique_number, make_kite};
use kitespec::spectral::{clique_lower_bound_spectral, kite_clique_bound, spectral_radius};
use kitespec::KiteParams;

fn main() -> kitespec::Result<()> {
    println!("{:>6} {:>4} {:>9} {:>9} {:>6}", "kite", "w", "spectral", "p-2q+1", "rho");
    for p in 5..=12 {
        for q in (1..).take_while(|&q| p >= 2 * q + 3) {
            let g = make_kite(KiteParams { p, q })?;
            println!(
                "{:>6} {:>4} {:>9} {:>9} {:>6.3}",
                format!("{p},{q}"),
                clique_number(&g),
                clique_lower_bound_spectral(&g),
                kite_clique_bound(p, q)?,
                spectral_radius(&g)
            );
        }
    }
    Ok(())
}
