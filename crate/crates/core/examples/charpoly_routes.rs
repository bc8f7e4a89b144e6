//! Computes characteristic polynomials three independent ways and checks they agree.

use std::time::Instant;

use kitespec::charpoly::{charpoly, charpoly_by_interpolation, charpoly_pendant_recursive};
use kitespec::graph::{make_family, Family};
use kitespec::KiteParams;

fn main() -> kitespec::Result<()> {
    let families = [
        Family::Kite(KiteParams::new(3, 1)?),
        Family::Kite(KiteParams::new(6, 6)?),
        Family::Path(10),
        Family::Complete(8),
        Family::Knm { n: 9, m: 4 },
        Family::Gc(7),
    ];
    for f in &families {
        let g = make_family(f)?;
        let t = Instant::now();
        let berkowitz = charpoly(&g);
        let t1 = t.elapsed();
        let t = Instant::now();
        let pendant = charpoly_pendant_recursive(&g);
        let t2 = t.elapsed();
        let t = Instant::now();
        let interp = charpoly_by_interpolation(&g);
        let t3 = t.elapsed();
        assert!(berkowitz == pendant && pendant == interp);
        println!("{f}: {berkowitz}");
        println!("    berkowitz {t1:?}, pendant {t2:?}, interpolation {t3:?}");
    }
    Ok(())
}
