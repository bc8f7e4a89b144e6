//! Adjacency spectra: cyclic Jacobi eigenvalues, the spectral radius (with an
//! exact Sturm-sequence cross-check), and the radius and clique bounds.

mod bounds;
mod sturm;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::charpoly::charpoly;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use bounds::{
    clique_lower_bound_spectral, kite_clique_bound, kite_radius_bounds, kite_radius_bounds_exact,
    lemma41_check, nikiforov_bound, verify_lemma41_inequality, Lemma41Check, Lemma41Report,
    RadiusBounds, CERTIFICATION_MARGIN,
};
pub use sturm::SturmChain;

pub const DEFAULT_TOL: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;
/// Width of the exact bracket around the spectral radius.
pub const RADIUS_PRECISION: f64 = 1e-10;

/// Eigenvalues sorted descending, with the tolerance they were computed to.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub tol: f64,
}

impl Spectrum {
    pub fn largest(&self) -> Option<f64> {
        self.values.first().copied()
    }

    /// `|Σλ| ≤ n·tol` and `|Σλ² − 2m| ≤ n²·tol`, with `tol` floored at 1e-12.
    pub fn is_consistent_with(&self, edge_count: usize) -> bool {
        let n = self.values.len() as f64;
        let tol = self.tol.max(1e-12);
        let sum: f64 = self.values.iter().sum();
        let sum_sq: f64 = self.values.iter().map(|x| x * x).sum();
        sum.abs() <= n * tol && (sum_sq - 2.0 * edge_count as f64).abs() <= n * n * tol
    }
}

/// All eigenvalues of the adjacency matrix by cyclic Jacobi rotations, run
/// until the off-diagonal Frobenius norm drops below `tol`.
pub fn eigenvalues(g: &Graph, tol: f64) -> Result<Spectrum> {
    if !(tol > 0.0) {
        return Err(Error::InvalidParams(format!("tolerance must be positive, got {tol}")));
    }
    let n = g.order();
    let mut a: Vec<Vec<f64>> = g
        .adjacency()
        .into_iter()
        .map(|row| row.into_iter().map(|x| x as f64).collect())
        .collect();
    let off_norm = |a: &[Vec<f64>]| {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i][j] * a[i][j];
                }
            }
        }
        s.sqrt()
    };
    let mut sweeps = 0;
    while off_norm(&a) >= tol {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NonConvergence { sweeps, off_norm: off_norm(&a) });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q] == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
            }
        }
    }
    let mut values: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    Ok(Spectrum { values, tol })
}

/// Spectral radius from both routes: the Jacobi estimate and an exact
/// rational bracket around the largest root of the characteristic polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct RadiusEstimate {
    pub jacobi: f64,
    /// `(lo, hi]` contains ρ; `hi − lo ≤` [`RADIUS_PRECISION`].
    pub bracket: (BigRational, BigRational),
}

impl RadiusEstimate {
    pub fn value(&self) -> f64 {
        let (lo, hi) = &self.bracket;
        ((lo + hi) / BigRational::from_integer(2.into())).to_f64().unwrap_or(f64::NAN)
    }

    pub fn lower(&self) -> &BigRational {
        &self.bracket.0
    }

    pub fn upper(&self) -> &BigRational {
        &self.bracket.1
    }
}

pub fn spectral_radius_estimate(g: &Graph) -> Result<RadiusEstimate> {
    if g.order() == 0 {
        return Err(Error::InvalidParams("the graph on 0 vertices has no spectrum".into()));
    }
    let jacobi = eigenvalues(g, DEFAULT_TOL)?.largest().expect("n >= 1");
    let bracket = SturmChain::new(&charpoly(g))
        .largest_root_bracket(RADIUS_PRECISION)
        .expect("symmetric matrices have real eigenvalues");
    let est = RadiusEstimate { jacobi, bracket };
    if (est.value() - jacobi).abs() > 1e-8 {
        log::warn!("Jacobi radius {jacobi} disagrees with the Sturm bracket {}", est.value());
    }
    Ok(est)
}

/// λ₁; 0 for the graph on 0 vertices.
pub fn spectral_radius(g: &Graph) -> f64 {
    if g.order() == 0 {
        return 0.0;
    }
    if g.is_connected() {
        spectral_radius_estimate(g).map(|e| e.value()).unwrap_or(f64::NAN)
    } else {
        eigenvalues(g, DEFAULT_TOL)
            .ok()
            .and_then(|s| s.largest())
            .unwrap_or(f64::NAN)
    }
}
