use std::collections::HashMap;

use super::charpoly;
use crate::graph::{bits, full_mask, Graph};
use crate::poly::IntPolynomial;

/// Characteristic polynomial by repeated pendant deletion.
///
/// The highest-numbered pendant vertex is stripped first. Induced subgraphs
/// are keyed by vertex mask so shared branches are computed once; a
/// pendant-free remainder is closed with [`charpoly`].
pub fn charpoly_pendant_recursive(g: &Graph) -> IntPolynomial {
    let mut memo = HashMap::new();
    strip(g, full_mask(g.order()), &mut memo)
}

fn strip(g: &Graph, mask: u32, memo: &mut HashMap<u32, IntPolynomial>) -> IntPolynomial {
    if let Some(p) = memo.get(&mask) {
        return p.clone();
    }
    let pendant = bits(mask)
        .filter(|&v| (g.neighbors(v) & mask).count_ones() == 1)
        .last();
    let result = match pendant {
        None => charpoly(&g.induced(mask)),
        Some(x1) => {
            let x2 = (g.neighbors(x1) & mask).trailing_zeros() as usize;
            let without_x1 = mask & !(1 << x1);
            let without_both = without_x1 & !(1 << x2);
            let a = strip(g, without_x1, memo).shift();
            let b = strip(g, without_both, memo);
            &a - &b
        }
    };
    memo.insert(mask, result.clone());
    result
}
