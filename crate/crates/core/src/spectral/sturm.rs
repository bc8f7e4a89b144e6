//! Sturm sequences over the rationals for real-root counting and bisection
//! on exact characteristic polynomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::IntPolynomial;

type RPoly = Vec<BigRational>;

fn trim(mut p: RPoly) -> RPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn from_int(p: &IntPolynomial) -> RPoly {
    p.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect()
}

/// Scales by `1/|lc|`, which keeps every sign intact.
fn normalize(p: RPoly) -> RPoly {
    let Some(lc) = p.last().map(|c| c.abs()) else {
        return p;
    };
    p.into_iter().map(|c| c / &lc).collect()
}

fn derivative(p: &RPoly) -> RPoly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
            .collect(),
    )
}

/// Quotient and remainder of `a / b` with `b` nonzero.
fn div_rem(a: &RPoly, b: &RPoly) -> (RPoly, RPoly) {
    let mut rem = a.clone();
    let db = b.len() - 1;
    let lc = b.last().expect("divisor is nonzero");
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] / lc;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                rem[k + j] -= &c * bj;
            }
        }
        quot[k] = c;
    }
    rem.truncate(db);
    (trim(quot), trim(rem))
}

fn eval(p: &RPoly, x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

fn chain_of(p: RPoly) -> Vec<RPoly> {
    let mut chain = vec![p.clone()];
    let d = derivative(&p);
    if d.is_empty() {
        return chain;
    }
    chain.push(normalize(d));
    loop {
        let k = chain.len();
        let (_, r) = div_rem(&chain[k - 2], &chain[k - 1]);
        if r.is_empty() {
            break;
        }
        chain.push(normalize(r.into_iter().map(|c| -c).collect()));
    }
    chain
}

/// Sturm chain of the square-free part of a nonzero polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<RPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPolynomial) -> Self {
        assert!(!p.is_zero(), "Sturm chain of the zero polynomial");
        let base = normalize(from_int(p));
        let chain = chain_of(base.clone());
        let gcd = chain.last().expect("chain is nonempty");
        let chain = if gcd.len() > 1 {
            // repeated roots: restart from p / gcd(p, p')
            let (sqfree, rem) = div_rem(&base, gcd);
            debug_assert!(rem.is_empty());
            chain_of(normalize(sqfree))
        } else {
            chain
        };
        SturmChain { chain }
    }

    fn variations<I: Iterator<Item = i8>>(signs: I) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn sign(x: &BigRational) -> i8 {
        if x.is_positive() {
            1
        } else if x.is_negative() {
            -1
        } else {
            0
        }
    }

    fn variations_at(&self, x: &BigRational) -> usize {
        Self::variations(self.chain.iter().map(|p| Self::sign(&eval(p, x))))
    }

    fn variations_at_pos_inf(&self) -> usize {
        Self::variations(self.chain.iter().map(|p| Self::sign(p.last().expect("nonzero"))))
    }

    /// Number of distinct real roots strictly greater than `x`.
    pub fn count_above(&self, x: &BigRational) -> usize {
        self.variations_at(x) - self.variations_at_pos_inf()
    }

    /// Number of distinct real roots in `(a, b]`.
    pub fn count_in(&self, a: &BigRational, b: &BigRational) -> usize {
        self.count_above(a) - self.count_above(b)
    }

    /// Cauchy bound: every root has absolute value below it.
    pub fn root_bound(&self) -> BigRational {
        let p = &self.chain[0];
        let lc = p.last().expect("nonzero").abs();
        let max = p.iter().map(|c| c.abs()).max().unwrap_or_else(BigRational::zero);
        BigRational::one() + max / lc
    }

    /// Bracket `(lo, hi]` of width at most `width` containing the largest real
    /// root, or `None` when there is no real root.
    pub fn largest_root_bracket(&self, width: f64) -> Option<(BigRational, BigRational)> {
        let bound = self.root_bound();
        let mut lo = -bound.clone();
        let mut hi = bound;
        if self.count_above(&lo) == 0 {
            return None;
        }
        let width = BigRational::from_float(width).expect("finite width");
        let two = BigRational::from_integer(BigInt::from(2));
        while &hi - &lo > width {
            let mid = (&lo + &hi) / &two;
            if self.count_above(&mid) >= 1 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Some((lo, hi))
    }

    pub fn largest_root(&self, width: f64) -> Option<f64> {
        self.largest_root_bracket(width)
            .map(|(lo, hi)| ((lo + hi) / BigRational::from_integer(BigInt::from(2))).to_f64().unwrap_or(f64::NAN))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(x: f64) -> BigRational {
        BigRational::from_float(x).unwrap()
    }

    #[test]
    fn counts_roots_of_k4() {
        // (λ − 3)(λ + 1)³
        let p = IntPolynomial::from_i64(&[-3, -8, -6, 0, 1]);
        let s = SturmChain::new(&p);
        assert_eq!(s.count_above(&rat(-10.0)), 2);
        assert_eq!(s.count_above(&rat(-1.0)), 1);
        assert_eq!(s.count_above(&rat(3.0)), 0);
        assert_eq!(s.count_in(&rat(2.5), &rat(3.0)), 1);
        let top = s.largest_root(1e-12).unwrap();
        assert!((top - 3.0).abs() < 1e-11);
    }

    #[test]
    fn paw_radius() {
        let p = IntPolynomial::from_i64(&[1, -2, -4, 0, 1]);
        let (lo, hi) = SturmChain::new(&p).largest_root_bracket(1e-10).unwrap();
        let lo = lo.to_f64().unwrap();
        let hi = hi.to_f64().unwrap();
        assert!(hi - lo <= 1e-10);
        assert!((lo - 2.1700864866).abs() < 1e-9, "{lo}");
    }

    #[test]
    fn no_real_roots() {
        let p = IntPolynomial::from_i64(&[1, 0, 1]);
        assert!(SturmChain::new(&p).largest_root(1e-6).is_none());
        let zero_root = IntPolynomial::x().pow(3);
        assert!(SturmChain::new(&zero_root).largest_root(1e-10).unwrap().abs() < 1e-10);
    }
}
