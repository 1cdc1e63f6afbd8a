//! Monic polynomials over Q with Sturm-sequence root counting and isolation.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::rational::rat_int;

/// Monic polynomial with rational coefficients, degree >= 1.
/// `coeffs[i]` multiplies `x^i`; the leading coefficient is stored and must
/// be 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonicPoly {
    coeffs: Vec<BigRational>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomial must be monic with degree >= 1")]
    NotMonic,
    #[error("interval endpoint is a root; perturb the endpoints")]
    EndpointIsRoot,
    #[error("empty interval: require lo < hi")]
    EmptyInterval,
    #[error("polynomial has {found} real roots, index {index} requested")]
    RootIndexOutOfRange { index: usize, found: usize },
}

/// Dense polynomial helper; not necessarily monic (used inside the chain).
#[derive(Clone, Debug, PartialEq)]
struct Dense(Vec<BigRational>);

impl Dense {
    fn trim(mut v: Vec<BigRational>) -> Self {
        while v.len() > 1 && v.last().map_or(false, Zero::is_zero) {
            v.pop();
        }
        Dense(v)
    }

    fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    fn derivative(&self) -> Dense {
        if self.0.len() <= 1 {
            return Dense(vec![BigRational::zero()]);
        }
        Dense::trim(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat_int(i as i64))
                .collect(),
        )
    }

    /// Remainder of self / other (other nonzero).
    fn rem(&self, other: &Dense) -> Dense {
        let mut r = self.0.clone();
        let d = other.degree();
        let lead = other.0[d].clone();
        while r.len() > d && r.len() > 1 {
            let k = r.len() - 1;
            let q = &r[k] / &lead;
            if q.is_zero() && r[k].is_zero() {
                r.pop();
                continue;
            }
            for i in 0..=d {
                let idx = k - d + i;
                let sub = &q * &other.0[i];
                r[idx] = &r[idx] - &sub;
            }
            r.pop();
        }
        Dense::trim(r)
    }

    fn neg(&self) -> Dense {
        Dense(self.0.iter().map(|c| -c.clone()).collect())
    }
}

impl MonicPoly {
    /// Ascending coefficients including the leading 1.
    pub fn new(coeffs: Vec<BigRational>) -> Result<Self, PolyError> {
        if coeffs.len() < 2 || !coeffs.last().unwrap().is_one() {
            return Err(PolyError::NotMonic);
        }
        Ok(MonicPoly { coeffs })
    }

    /// `x^n + a_{n-1} x^{n-1} + ... + a_0` from the non-leading coefficients
    /// in descending order, matching the tuple `(a_{n-1}, ..., a_0)`.
    pub fn from_descending_tail(tail: &[BigRational]) -> Result<Self, PolyError> {
        let mut coeffs: Vec<BigRational> = tail.iter().rev().cloned().collect();
        coeffs.push(BigRational::one());
        MonicPoly::new(coeffs)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Non-leading coefficients, descending: `(a_{n-1}, ..., a_0)`.
    pub fn descending_tail(&self) -> Vec<BigRational> {
        self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .rev()
            .cloned()
            .collect()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        Dense(self.coeffs.clone()).eval(x)
    }

    /// Evaluate at an exact real.
    pub fn eval_real(&self, x: &super::real::Real) -> super::real::Real {
        use super::real::Real;
        let mut acc = Real::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&Real::from_rational(c.clone()));
        }
        acc
    }

    fn sturm_chain(&self) -> Vec<Dense> {
        // Chain of the square-free part, so the count is of distinct roots.
        let p = Dense(self.coeffs.clone());
        let dp = p.derivative();
        let g = gcd(&p, &dp);
        let p = if g.degree() >= 1 { div_exact(&p, &g) } else { p };
        let mut chain = vec![p.clone(), p.derivative()];
        loop {
            let last = &chain[chain.len() - 1];
            if last.is_zero() || last.degree() == 0 {
                break;
            }
            let prev = &chain[chain.len() - 2];
            let r = prev.rem(last).neg();
            if r.is_zero() {
                break;
            }
            chain.push(r);
        }
        chain
    }

    fn variations(chain: &[Dense], x: &BigRational) -> usize {
        let mut count = 0;
        let mut last: Option<bool> = None;
        for p in chain {
            let v = p.eval(x);
            if v.is_zero() {
                continue;
            }
            let pos = v.is_positive();
            if let Some(prev) = last {
                if prev != pos {
                    count += 1;
                }
            }
            last = Some(pos);
        }
        count
    }

    /// Number of distinct real roots in the open interval `(lo, hi)`.
    pub fn count_roots(&self, lo: &BigRational, hi: &BigRational) -> Result<usize, PolyError> {
        if lo >= hi {
            return Err(PolyError::EmptyInterval);
        }
        if self.eval(lo).is_zero() || self.eval(hi).is_zero() {
            return Err(PolyError::EndpointIsRoot);
        }
        let chain = self.sturm_chain();
        Ok(Self::variations(&chain, lo) - Self::variations(&chain, hi))
    }

    /// Cauchy bound: all real roots lie in (-M, M).
    pub fn root_bound(&self) -> BigRational {
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigRational::zero);
        max + rat_int(1)
    }

    /// Total number of distinct real roots.
    pub fn count_real_roots(&self) -> usize {
        let m = self.root_bound();
        // The bound is strict, so the endpoints are never roots.
        self.count_roots(&(-m.clone()), &m).expect("bound excludes roots")
    }

    /// Isolating interval `(lo, hi)` for the `index`-th smallest real root
    /// (1-based): contains exactly that root and no other.
    pub fn isolate_root(&self, index: usize) -> Result<(BigRational, BigRational), PolyError> {
        let total = self.count_real_roots();
        if index == 0 || index > total {
            return Err(PolyError::RootIndexOutOfRange { index, found: total });
        }
        let chain = self.sturm_chain();
        let m = self.root_bound();
        let mut lo = -m.clone();
        let mut hi = m;
        let v_lo = Self::variations(&chain, &lo);
        // Roots in (lo, x] = v_lo - variations(x) when x is not a root.
        // Bisect until exactly one root with the right rank remains.
        let mut lo_rank = 0usize; // roots <= lo
        let _ = v_lo;
        loop {
            let count_here = self.count_roots(&lo, &hi).expect("invariant: endpoints non-root");
            if count_here == 1 && lo_rank + 1 == index {
                return Ok((lo, hi));
            }
            let mut mid = (&lo + &hi) / rat_int(2);
            // Nudge off a root if we landed on one.
            while self.eval(&mid).is_zero() {
                mid = (&lo + &mid) / rat_int(2);
            }
            let left = self.count_roots(&lo, &mid).expect("non-root endpoints");
            if lo_rank + left >= index {
                hi = mid;
            } else {
                lo_rank += left;
                // A root may sit exactly between the halves only if mid were
                // a root, which we excluded.
                lo = mid;
            }
        }
    }
}

fn gcd(a: &Dense, b: &Dense) -> Dense {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() && !(b.degree() == 0 && !b.0[0].is_zero()) {
        let r = a.rem(&b);
        a = b;
        b = r;
    }
    if b.is_zero() {
        a
    } else {
        Dense(vec![BigRational::one()])
    }
}

fn div_exact(a: &Dense, b: &Dense) -> Dense {
    // Long division, remainder known zero.
    let mut r = a.0.clone();
    let d = b.degree();
    let lead = b.0[d].clone();
    let mut q = vec![BigRational::zero(); r.len() - d];
    while r.len() > d {
        let k = r.len() - 1;
        let c = &r[k] / &lead;
        q[k - d] = c.clone();
        for i in 0..=d {
            let idx = k - d + i;
            let sub = &c * &b.0[i];
            r[idx] = &r[idx] - &sub;
        }
        r.pop();
    }
    Dense::trim(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn poly(coeffs: &[i64]) -> MonicPoly {
        MonicPoly::new(coeffs.iter().map(|&c| rat_int(c)).collect()).unwrap()
    }

    #[test]
    fn sturm_count_examples() {
        let p = poly(&[-2, 0, 1]); // x^2 - 2
        assert_eq!(p.count_roots(&rat_int(0), &rat_int(2)).unwrap(), 1);
        assert_eq!(p.count_roots(&rat_int(-2), &rat_int(2)).unwrap(), 2);
        let q = poly(&[1, 0, 1]); // x^2 + 1
        assert_eq!(q.count_roots(&rat_int(-10), &rat_int(10)).unwrap(), 0);
    }

    #[test]
    fn endpoint_root_rejected() {
        let p = poly(&[-4, 0, 1]); // roots +-2
        assert_eq!(
            p.count_roots(&rat_int(2), &rat_int(3)),
            Err(PolyError::EndpointIsRoot)
        );
    }

    #[test]
    fn isolation_orders_roots() {
        let p = poly(&[-2, 0, 1]);
        let (lo1, hi1) = p.isolate_root(1).unwrap();
        let (lo2, hi2) = p.isolate_root(2).unwrap();
        // -sqrt(2) ~ -1.414, sqrt(2) ~ 1.414
        assert!(lo1 < rat(-14, 10) && hi1 > rat(-15, 10) || (lo1 < rat(-14, 10) && hi1 < rat_int(0)));
        assert!(hi1 <= lo2);
        assert!(lo2 < rat(15, 10) && hi2 > rat(14, 10));
        assert!(p.isolate_root(3).is_err());

        let linear = poly(&[-3, 1]); // x - 3
        let (lo, hi) = linear.isolate_root(1).unwrap();
        assert!(lo < rat_int(3) && rat_int(3) < hi);
    }

    #[test]
    fn repeated_roots_counted_once() {
        // (x-1)^2 (x+2) = x^3 - 3x + 2
        let p = poly(&[2, -3, 0, 1]);
        assert_eq!(p.count_real_roots(), 2);
    }

    #[test]
    fn descending_tail_roundtrip() {
        let p = poly(&[-2, 0, 1]);
        let tail = p.descending_tail();
        assert_eq!(tail, vec![rat_int(0), rat_int(-2)]);
        let q = MonicPoly::from_descending_tail(&tail).unwrap();
        assert_eq!(p, q);
    }
}
