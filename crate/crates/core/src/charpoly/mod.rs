//! Exact characteristic polynomials `det(λI − A)` of adjacency matrices.
//!
//! Three independent routes produce the same integer polynomial:
//!
//! * [`charpoly`]: Berkowitz's division-free algorithm,
//! * [`charpoly_pendant_recursive`]: repeated pendant deletion,
//!   `P(G) = λ·P(G − x₁) − P(G − x₁ − x₂)` for a pendant `x₁` with neighbour `x₂`,
//! * [`charpoly_by_interpolation`]: fraction-free determinants at λ = 0..=n,
//!   interpolated back to coefficients.
//!
//! Cospectrality is decided on these exact polynomials only.

mod closed_form;
mod interp;
mod pendant;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::graph::Graph;
use crate::poly::IntPolynomial;

pub use closed_form::{
    a_closed_form_in_u, closed_form_complete, closed_form_gc, closed_form_kite, closed_form_kite1,
    closed_form_kite2, kite_u_closed_form, kite_u_identity_certify, kite_u_identity_check,
    path_poly_a, u_sample_points, UIdentityCertificate,
};
pub use interp::{charpoly_by_interpolation, det_bareiss};
pub use pendant::charpoly_pendant_recursive;

/// Characteristic polynomial by the Berkowitz method.
pub fn charpoly(g: &Graph) -> IntPolynomial {
    let a = g.adjacency();
    berkowitz(&a)
}

/// Berkowitz over the integers for an arbitrary square matrix.
pub fn berkowitz(a: &[Vec<i64>]) -> IntPolynomial {
    let n = a.len();
    // coefficients of the leading r×r block's polynomial, highest power first
    let mut vect: Vec<BigInt> = vec![BigInt::from(1)];
    for r in 0..n {
        let diag = BigInt::from(a[r][r]);
        // Toeplitz column: 1, −a_rr, −R·C, −R·M·C, ..., −R·M^{r−1}·C
        let mut col = Vec::with_capacity(r + 2);
        col.push(BigInt::from(1));
        col.push(-diag);
        let mut mc: Vec<BigInt> = (0..r).map(|i| BigInt::from(a[i][r])).collect();
        for k in 0..r {
            let rmc: BigInt = (0..r).map(|j| BigInt::from(a[r][j]) * &mc[j]).sum();
            col.push(-rmc);
            if k + 1 < r {
                mc = (0..r)
                    .map(|i| {
                        (0..r)
                            .filter(|&j| a[i][j] != 0)
                            .map(|j| BigInt::from(a[i][j]) * &mc[j])
                            .sum()
                    })
                    .collect();
            }
        }
        let mut next = vec![BigInt::zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, v) in vect.iter().enumerate().take(i + 1) {
                if let Some(t) = col.get(i - j) {
                    *slot += t * v;
                }
            }
        }
        vect = next;
    }
    vect.reverse();
    IntPolynomial::new(vect)
}

/// Graphs of different order are never cospectral.
pub fn are_cospectral(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order() && charpoly(g) == charpoly(h)
}

/// Number of closed walks of length `i`, i.e. `tr(A^i)`.
pub fn walk_count(g: &Graph, i: usize) -> BigInt {
    assert!(i >= 1, "walk length must be at least 1");
    walk_counts(g, i).pop().expect("at least one length requested")
}

/// `tr(A^i)` for `i = 1..=max_len`.
pub fn walk_counts(g: &Graph, max_len: usize) -> Vec<BigInt> {
    let n = g.order();
    let mut power: Vec<Vec<BigInt>> = g
        .adjacency()
        .into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect();
    let mut out = Vec::with_capacity(max_len);
    for len in 1..=max_len {
        out.push((0..n).map(|v| power[v][v].clone()).sum());
        if len < max_len {
            // A^{len+1} = A^{len} · A, using the bitset rows of A
            power = power
                .iter()
                .map(|row| {
                    (0..n)
                        .map(|j| {
                            crate::graph::bits(g.neighbors(j)).map(|k| &row[k]).sum()
                        })
                        .collect()
                })
                .collect();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, make_kite, Family, KiteParams};

    fn kite(p: usize, q: usize) -> Graph {
        make_kite(KiteParams::new(p, q).unwrap()).unwrap()
    }

    #[test]
    fn charpoly_examples() {
        let k3 = make_family(&Family::Complete(3)).unwrap();
        assert_eq!(charpoly(&k3), IntPolynomial::from_i64(&[-2, -3, 0, 1]));
        let p2 = make_family(&Family::Path(2)).unwrap();
        assert_eq!(charpoly(&p2), IntPolynomial::from_i64(&[-1, 0, 1]));
        assert_eq!(charpoly(&kite(3, 1)), IntPolynomial::from_i64(&[1, -2, -4, 0, 1]));
        assert_eq!(charpoly(&Graph::empty(0).unwrap()), IntPolynomial::one());
    }

    #[test]
    fn berkowitz_general_matrix() {
        // det(λI − A) for A = [[1,2],[3,4]] is λ² − 5λ − 2
        assert_eq!(berkowitz(&[vec![1, 2], vec![3, 4]]), IntPolynomial::from_i64(&[-2, -5, 1]));
        // upper triangular: product of (λ − a_ii)
        let a = vec![vec![2, 7, 1], vec![0, -1, 5], vec![0, 0, 3]];
        let expected = &(&IntPolynomial::linear(-2) * &IntPolynomial::linear(1))
            * &IntPolynomial::linear(-3);
        assert_eq!(berkowitz(&a), expected);
    }

    #[test]
    fn walk_count_examples() {
        let g = kite(4, 2);
        assert_eq!(walk_count(&g, 1), BigInt::from(0));
        assert_eq!(walk_count(&g, 2), BigInt::from(16));
        assert_eq!(walk_count(&g, 3), BigInt::from(24));
        // K_3: tr(A^4) = 2^4 + 2·(−1)^4 = 18
        let k3 = make_family(&Family::Complete(3)).unwrap();
        assert_eq!(walk_count(&k3, 4), BigInt::from(18));
    }

    #[test]
    fn cospectral_examples() {
        let g = kite(4, 2);
        let relabelled = g.permuted(&[5, 3, 1, 0, 2, 4]);
        assert!(are_cospectral(&g, &relabelled));
        assert!(!are_cospectral(&g, &kite(5, 1)));
        let star = make_family(&Family::Knm { n: 5, m: 4 }).unwrap();
        let c4_k1 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(are_cospectral(&star, &c4_k1));
        assert_eq!(charpoly(&star), IntPolynomial::from_i64(&[0, 0, 0, -4, 0, 1]));
        assert!(!are_cospectral(&kite(3, 1), &kite(3, 2)));
    }
}
