//! Closed-form characteristic polynomials of complete graphs, kites and the
//! two-pendant clique `gc(p)`, plus the path recurrence `a_n` and its
//! evaluation under the substitution λ = u + 1/u.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{make_kite, KiteParams};
use crate::poly::{ExactRational, IntPolynomial};

use super::charpoly;

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParams(msg()))
    }
}

fn complete_unchecked(p: usize) -> IntPolynomial {
    if p == 0 {
        return IntPolynomial::one();
    }
    &IntPolynomial::linear(1 - p as i64) * &IntPolynomial::linear(1).pow(p as u32 - 1)
}

/// `(λ − p + 1)(λ + 1)^{p−1}`.
pub fn closed_form_complete(p: usize) -> Result<IntPolynomial> {
    require(p >= 1, || format!("closed_form_complete needs p >= 1, got {p}"))?;
    Ok(complete_unchecked(p))
}

/// `(λ + 1)^{p−2} · [λ³ − (p−2)λ² − pλ + (p−2)]`.
pub fn closed_form_kite1(p: usize) -> Result<IntPolynomial> {
    require(p >= 2, || format!("closed_form_kite1 needs p >= 2, got {p}"))?;
    let p = p as i64;
    let cubic = IntPolynomial::from_i64(&[p - 2, -p, -(p - 2), 1]);
    Ok(&IntPolynomial::linear(1).pow(p as u32 - 2) * &cubic)
}

/// `(λ² − 1)·P(K_p) − λ·P(K_{p−1})`.
pub fn closed_form_kite2(p: usize) -> Result<IntPolynomial> {
    require(p >= 2, || format!("closed_form_kite2 needs p >= 2, got {p}"))?;
    let lhs = &IntPolynomial::from_i64(&[-1, 0, 1]) * &complete_unchecked(p);
    let rhs = complete_unchecked(p - 1).shift();
    Ok(&lhs - &rhs)
}

/// General kite: `a_q·P(K_p) − a_{q−1}·P(K_{p−1})`, with `a_{−1} = 0`.
pub fn closed_form_kite(p: usize, q: usize) -> Result<IntPolynomial> {
    require(p >= 1, || format!("closed_form_kite needs p >= 1, got {p}"))?;
    let head = &path_poly_a(q) * &complete_unchecked(p);
    if q == 0 {
        return Ok(head);
    }
    Ok(&head - &(&path_poly_a(q - 1) * &complete_unchecked(p - 1)))
}

/// `gc(p)`: `(λ + 1)^{p−3} · g(λ)` with the quintic
/// `g = λ⁵ − (p−3)λ⁴ − (2p−1)λ³ + (p−5)λ² + (2p−3)λ − (p−3)`,
/// obtained from `λ·P(Kite_{p,1}) − P(Kite_{p−1,1})`.
pub fn closed_form_gc(p: usize) -> Result<IntPolynomial> {
    require(p >= 3, || format!("closed_form_gc needs p >= 3, got {p}"))?;
    let p = p as i64;
    let quintic = IntPolynomial::from_i64(&[-(p - 3), 2 * p - 3, p - 5, -(2 * p - 1), -(p - 3), 1]);
    Ok(&IntPolynomial::linear(1).pow(p as u32 - 3) * &quintic)
}

/// `a_0 = 1`, `a_1 = λ`, `a_n = λ·a_{n−1} − a_{n−2}`; equals `P(P_n)` for n ≥ 1.
pub fn path_poly_a(n: usize) -> IntPolynomial {
    let (mut prev, mut cur) = (IntPolynomial::zero(), IntPolynomial::one());
    for _ in 0..n {
        let next = &cur.shift() - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

fn check_u(u: &ExactRational) -> Result<()> {
    if u.is_zero() || u.is_one() || *u == -ExactRational::one() {
        return Err(Error::SingularU(u.to_string()));
    }
    Ok(())
}

fn powi(u: &ExactRational, e: i64) -> ExactRational {
    if e >= 0 {
        num_traits::pow(u.clone(), e as usize)
    } else {
        num_traits::pow(u.recip(), (-e) as usize)
    }
}

/// `u^{−n}(1 − u^{2n+2}) / (1 − u²)`, the value of `a_n` at λ = u + 1/u.
pub fn a_closed_form_in_u(n: usize, u: &ExactRational) -> Result<ExactRational> {
    check_u(u)?;
    let one = ExactRational::one();
    let n = n as i64;
    Ok(powi(u, -n) * (&one - powi(u, 2 * n + 2)) / (&one - powi(u, 2)))
}

/// Kite polynomial at λ = u + 1/u in closed form:
///
/// `u^{−q}(1 + u + u^{−1})^{p−2} / (1 − u²) · [(2 − p)(1 + u^{−1} − u^{2q+2} − u^{2q+3}) + (u^{−2} − u^{2q+4})]`.
pub fn kite_u_closed_form(p: usize, q: usize, u: &ExactRational) -> Result<ExactRational> {
    check_u(u)?;
    require(p >= 2, || format!("kite_u_closed_form needs p >= 2, got {p}"))?;
    let one = ExactRational::one();
    let q = q as i64;
    let base = &one + u + u.recip();
    let prefactor = powi(u, -q) * num_traits::pow(base, p - 2) / (&one - powi(u, 2));
    let two_minus_p = ExactRational::from_integer(BigInt::from(2 - p as i64));
    let bracket = two_minus_p * (&one + u.recip() - powi(u, 2 * q + 2) - powi(u, 2 * q + 3))
        + (powi(u, -2) - powi(u, 2 * q + 4));
    Ok(prefactor * bracket)
}

/// Evaluates `P(Kite_{p,q})` at λ = u + 1/u both from the exact characteristic
/// polynomial and from [`kite_u_closed_form`], and checks the `a_n` sub-identities
/// for n = q and n = q + 1. True iff all three agree exactly.
pub fn kite_u_identity_check(p: usize, q: usize, u: &ExactRational) -> Result<bool> {
    KiteParams::new(p, q)?.require_theorem_domain()?;
    check_u(u)?;
    let lambda = u + u.recip();
    let direct = charpoly(&make_kite(KiteParams { p, q })?).eval(&lambda);
    let closed = kite_u_closed_form(p, q, u)?;
    let a_ok = [q, q + 1]
        .into_iter()
        .map(|n| Ok(path_poly_a(n).eval(&lambda) == a_closed_form_in_u(n, u)?))
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .all(|ok| ok);
    Ok(a_ok && direct == closed)
}

/// `count` distinct sample points avoiding 0 and ±1: 2, −2, 2/3, 3, −3, 3/4, ...
pub fn u_sample_points(count: usize) -> Vec<ExactRational> {
    (0..count)
        .map(|k| {
            let j = BigInt::from(k / 3 + 2);
            match k % 3 {
                0 => ExactRational::from_integer(j),
                1 => ExactRational::from_integer(-j),
                _ => ExactRational::new(j.clone(), j + 1),
            }
        })
        .collect()
}

/// Certificate that the closed form agrees with `P(Kite_{p,q})` as rational
/// functions of `u`: after clearing `u^n(1 − u²)` both sides are polynomials of
/// degree at most `2n + 2`, so agreement at more points than that is a proof.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UIdentityCertificate {
    pub p: usize,
    pub q: usize,
    pub points_checked: usize,
    pub degree_bound: usize,
    pub failures: Vec<String>,
    pub certified: bool,
}

/// Runs [`kite_u_identity_check`] at `2(p+q) + 10` distinct points unless `points` is given.
pub fn kite_u_identity_certify(
    p: usize,
    q: usize,
    points: Option<usize>,
) -> Result<UIdentityCertificate> {
    let n = p + q;
    let count = points.unwrap_or(2 * n + 10);
    let mut failures = Vec::new();
    for u in u_sample_points(count) {
        if !kite_u_identity_check(p, q, &u)? {
            failures.push(u.to_string());
        }
    }
    let degree_bound = 2 * n + 2;
    Ok(UIdentityCertificate {
        p,
        q,
        points_checked: count,
        degree_bound,
        certified: failures.is_empty() && count > degree_bound,
        failures,
    })
}
