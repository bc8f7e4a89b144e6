//! Certifies the kite polynomial under the substitution λ = u + 1/u by exact
//! evaluation at more points than the degree of the cleared identity.

use kitespec::charpoly::{kite_u_closed_form, kite_u_identity_certify};
use kitespec::ExactRational;

fn main() -> kitespec::Result<()> {
    let u = ExactRational::from_integer(2.into());
    println!("Kite_{{3,1}} at u = 2: {}", kite_u_closed_form(3, 1, &u)?);
    for p in 3..=8 {
        let row: Vec<String> = (1..=5)
            .map(|q| {
                kite_u_identity_certify(p, q, None)
                    .map(|c| format!("{}/{}", c.points_checked, if c.certified { "ok" } else { "FAIL" }))
            })
            .collect::<kitespec::Result<_>>()?;
        println!("p={p}: {}", row.join("  "));
    }
    Ok(())
}
