//! Compares the closed-form kite polynomials with direct computation.

use kitespec::charpoly::{
    charpoly, closed_form_complete, closed_form_gc, closed_form_kite, closed_form_kite1,
    closed_form_kite2,
};
use kitespec::graph::{make_family, make_kite, Family};
use kitespec::KiteParams;

fn main() -> kitespec::Result<()> {
    println!("{:>3}  {:^8} {:^8} {:^8} {:^8}", "p", "K_p", "q=1", "q=2", "gc");
    for p in 3..=12 {
        let direct = |f: Family| make_family(&f).map(|g| charpoly(&g));
        let kite = |q| make_kite(KiteParams { p, q }).map(|g| charpoly(&g));
        let ok = |b: bool| if b { "ok" } else { "MISMATCH" };
        println!(
            "{p:>3}  {:^8} {:^8} {:^8} {:^8}",
            ok(closed_form_complete(p)? == direct(Family::Complete(p))?),
            ok(closed_form_kite1(p)? == kite(1)?),
            ok(closed_form_kite2(p)? == kite(2)?),
            ok(closed_form_gc(p)? == direct(Family::Gc(p))?),
        );
    }
    println!("\nKite_{{5,4}} = a_4 P(K_5) - a_3 P(K_4) = {}", closed_form_kite(5, 4)?);
    println!("gc(5) = {}", closed_form_gc(5)?);
    Ok(())
}
