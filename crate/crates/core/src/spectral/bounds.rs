//! Spectral-radius sandwich for kites, the `K_{r+1}`-free radius bound, and
//! the clique lower bounds derived from it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::spectral_radius_estimate;
use crate::error::{Error, Result};
use crate::graph::{Graph, KiteParams};

/// Margin a radius must clear before a bound counts as certified.
pub const CERTIFICATION_MARGIN: f64 = 1e-9;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn margin() -> BigRational {
    rat(1, 1_000_000_000)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RadiusBounds {
    pub lower: f64,
    pub upper: f64,
    pub p: usize,
}

/// `(p − 1 + 1/p² + 1/p³, p − 1 + 1/(4p) + 1/(p² − 2p))` as exact rationals.
pub fn kite_radius_bounds_exact(p: usize) -> Result<(BigRational, BigRational)> {
    if p < 3 {
        return Err(Error::OutOfRange(format!("radius bounds need p >= 3, got {p}")));
    }
    let p = p as i64;
    let base = rat(p - 1, 1);
    let lower = &base + rat(1, p * p) + rat(1, p * p * p);
    let upper = &base + rat(1, 4 * p) + rat(1, p * p - 2 * p);
    Ok((lower, upper))
}

pub fn kite_radius_bounds(p: usize) -> Result<RadiusBounds> {
    let (lower, upper) = kite_radius_bounds_exact(p)?;
    Ok(RadiusBounds {
        lower: lower.to_f64().unwrap_or(f64::NAN),
        upper: upper.to_f64().unwrap_or(f64::NAN),
        p,
    })
}

/// `sqrt(2m(r − 1)/r)`: no `K_{r+1}`-free graph with `m` edges has a larger radius.
pub fn nikiforov_bound(m: usize, r: usize) -> Result<f64> {
    if r < 1 {
        return Err(Error::InvalidParams("nikiforov_bound needs r >= 1".into()));
    }
    Ok((2.0 * m as f64 * (r - 1) as f64 / r as f64).sqrt())
}

/// Certified lower bound on the clique number: `1 + max r` such that the radius
/// exceeds the `K_{r+1}`-free bound by more than [`CERTIFICATION_MARGIN`].
///
/// The comparison uses the exact lower end `lo` of the radius bracket and
/// checks `(lo − margin)² > 2m(r − 1)/r` over the rationals, so ties never
/// raise the bound.
pub fn clique_lower_bound_spectral(g: &Graph) -> usize {
    let n = g.order();
    let m = g.edge_count();
    if n == 0 || m == 0 {
        return 1;
    }
    let Ok(est) = spectral_radius_estimate(g) else {
        return 1;
    };
    let lo = est.lower() - margin();
    if !lo.is_positive() {
        return 1;
    }
    let lo_sq = &lo * &lo;
    let two_m = BigInt::from(2 * m);
    (1..n)
        .filter(|&r| {
            let bound_sq = BigRational::new(&two_m * BigInt::from(r - 1), BigInt::from(r));
            lo_sq > bound_sq
        })
        .max()
        .map_or(1, |r| r + 1)
}

/// `p − 2q + 1`; values at or below 1 carry no information.
pub fn kite_clique_bound(p: usize, q: usize) -> Result<i64> {
    KiteParams::new(p, q)?.require_theorem_domain()?;
    Ok(p as i64 - 2 * q as i64 + 1)
}

/// One instance of `2m(r − 1)/r < (p − 1 + 1/p² + 1/p³)²` with `m = (p² − p + 2q)/2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma41Check {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub lhs_squared: String,
    pub rhs_squared: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma41Report {
    pub p_max: usize,
    pub checks: Vec<Lemma41Check>,
    pub violations: usize,
}

pub fn lemma41_check(p: usize, q: usize, r: usize) -> Lemma41Check {
    let (pi, qi, ri) = (p as i64, q as i64, r as i64);
    // 2m = p² − p + 2q
    let two_m = BigInt::from(pi * pi - pi + 2 * qi);
    let lhs = BigRational::new(two_m * BigInt::from(ri - 1), BigInt::from(ri));
    let root = rat(pi - 1, 1) + rat(1, pi * pi) + rat(1, pi * pi * pi);
    let rhs = &root * &root;
    Lemma41Check { p, q, r, holds: lhs < rhs, lhs_squared: lhs.to_string(), rhs_squared: rhs.to_string() }
}

/// Every `(p, q, r)` with `3 ≤ p ≤ p_max`, `q ≥ 1`, `p − 2q ≥ 3`, `2 ≤ r < p − 2q`.
pub fn verify_lemma41_inequality(p_max: usize) -> Result<Lemma41Report> {
    if p_max < 3 {
        return Err(Error::OutOfRange(format!("p_max must be at least 3, got {p_max}")));
    }
    let mut checks = Vec::new();
    for p in 3..=p_max {
        for q in (1..).take_while(|&q| p >= 2 * q + 3) {
            for r in 2..p - 2 * q {
                checks.push(lemma41_check(p, q, r));
            }
        }
    }
    let violations = checks.iter().filter(|c| !c.holds).count();
    Ok(Lemma41Report { p_max, checks, violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{clique_number, make_family, make_kite, Family};

    #[test]
    fn radius_bound_examples() {
        let b3 = kite_radius_bounds(3).unwrap();
        assert!((b3.lower - 2.148148148148148).abs() < 1e-12);
        assert!((b3.upper - 2.4166666666666665).abs() < 1e-12);
        let b4 = kite_radius_bounds(4).unwrap();
        assert_eq!((b4.lower, b4.upper), (3.078125, 3.1875));
        assert!(kite_radius_bounds(2).is_err());
        let paw = make_kite(KiteParams::new(3, 1).unwrap()).unwrap();
        let rho = super::super::spectral_radius(&paw);
        assert!(b3.lower < rho && rho < b3.upper);
    }

    #[test]
    fn nikiforov_examples() {
        assert!((nikiforov_bound(8, 2).unwrap() - 8f64.sqrt()).abs() < 1e-12);
        assert_eq!(nikiforov_bound(17, 1).unwrap(), 0.0);
        assert_eq!(nikiforov_bound(0, 5).unwrap(), 0.0);
        assert!(nikiforov_bound(3, 0).is_err());
    }

    #[test]
    fn spectral_clique_bound_examples() {
        let k5 = make_family(&Family::Complete(5)).unwrap();
        assert_eq!(clique_lower_bound_spectral(&k5), 5);
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(clique_lower_bound_spectral(&c5) <= 2);
        let k72 = make_kite(KiteParams::new(7, 2).unwrap()).unwrap();
        let b = clique_lower_bound_spectral(&k72);
        assert!(b >= 4 && b <= clique_number(&k72), "{b}");
        assert_eq!(clique_lower_bound_spectral(&Graph::empty(4).unwrap()), 1);
        assert_eq!(clique_lower_bound_spectral(&Graph::empty(0).unwrap()), 1);
    }

    #[test]
    fn kite_clique_bound_examples() {
        assert_eq!(kite_clique_bound(7, 2).unwrap(), 4);
        assert_eq!(kite_clique_bound(4, 2).unwrap(), 1);
        assert_eq!(kite_clique_bound(5, 1).unwrap(), 4);
        assert!(kite_clique_bound(2, 1).is_err());
    }

    #[test]
    fn lemma41_examples() {
        // 2m = 81 − 9 + 2 = 74, so lhs = 74·1/2 = 37 < (8 + 1/81 + 1/729)²
        let c = lemma41_check(9, 1, 2);
        assert_eq!(c.lhs_squared, "37");
        assert!(c.holds);
        let report = verify_lemma41_inequality(7).unwrap();
        let p7: Vec<_> = report.checks.iter().filter(|c| c.p == 7 && c.q == 2).collect();
        assert_eq!(p7.len(), 1);
        assert_eq!(p7[0].r, 2);
        assert!(p7[0].holds);
        assert_eq!(verify_lemma41_inequality(20).unwrap().violations, 0);
        assert!(verify_lemma41_inequality(2).is_err());
    }
}
