use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::graph::Graph;
use crate::poly::IntPolynomial;

/// Determinant by Bareiss fraction-free elimination with row pivoting.
pub fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                // exact by Sylvester's identity
                m[i][j] = num / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Characteristic polynomial from `det(kI − A)` at k = 0..=n, recovered by
/// Newton interpolation over the rationals.
pub fn charpoly_by_interpolation(g: &Graph) -> IntPolynomial {
    let n = g.order();
    let adj = g.adjacency();
    let values: Vec<BigRational> = (0..=n)
        .map(|k| {
            let m = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| BigInt::from(if i == j { k as i64 } else { 0 } - adj[i][j]))
                        .collect()
                })
                .collect();
            BigRational::from_integer(det_bareiss(m))
        })
        .collect();

    // divided differences on the nodes 0, 1, ..., n
    let mut dd = values;
    for level in 1..=n {
        for i in (level..=n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / BigRational::from_integer(BigInt::from(level));
        }
    }
    // Horner on the Newton form: p = dd0 + (x−0)(dd1 + (x−1)(dd2 + ...))
    let mut coeffs: Vec<BigRational> = vec![dd[n].clone()];
    for i in (0..n).rev() {
        // coeffs ← coeffs·(x − i) + dd[i]
        let node = BigRational::from_integer(BigInt::from(i));
        let mut next = vec![BigRational::zero(); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * &node;
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    let ints = coeffs
        .into_iter()
        .map(|c| {
            assert!(c.denom().is_one() || c.is_zero(), "non-integer interpolated coefficient {c}");
            c.to_integer()
        })
        .collect();
    let p = IntPolynomial::new(ints);
    debug_assert!(p.leading().map_or(n == 0, |c| !c.is_negative()));
    p
}
