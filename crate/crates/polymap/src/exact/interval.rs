//! Rational interval arithmetic with dyadic outward rounding.
//!
//! Bounds are ordinary `BigRational`s, but after every operation they are
//! rounded outward onto the grid `k / 2^prec` so coefficient sizes stay
//! proportional to the requested precision instead of compounding.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[cfg(test)]
use super::rational::rat;

/// Closed interval `[lo, hi]` guaranteed to contain the value it tracks.
#[derive(Clone, Debug, PartialEq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

fn pow2(prec: u32) -> BigInt {
    BigInt::one() << prec
}

/// Largest dyadic `k/2^prec` that is `<= x`.
pub fn dyadic_floor(x: &BigRational, prec: u32) -> BigRational {
    let scale = pow2(prec);
    let scaled = x * BigRational::from(scale.clone());
    BigRational::new(scaled.floor().to_integer(), scale)
}

/// Smallest dyadic `k/2^prec` that is `>= x`.
pub fn dyadic_ceil(x: &BigRational, prec: u32) -> BigRational {
    let scale = pow2(prec);
    let scaled = x * BigRational::from(scale.clone());
    BigRational::new(scaled.ceil().to_integer(), scale)
}

/// Floor of sqrt(n) for a nonnegative integer.
fn isqrt(n: &BigInt) -> BigInt {
    n.sqrt()
}

impl Interval {
    pub fn point(x: BigRational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Sign if the interval pins it down; `None` while 0 is strictly interior
    /// or touches only one bound.
    pub fn definite_sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    /// Round both bounds outward to the `2^-prec` grid when they carry more
    /// bits than the precision justifies.
    pub fn coarsen(&self, prec: u32) -> Self {
        let budget = (prec as u64 + 64) * 4;
        let heavy = |r: &BigRational| {
            (r.numer().bits() as u64).saturating_add(r.denom().bits() as u64) > budget
        };
        if heavy(&self.lo) || heavy(&self.hi) {
            Interval {
                lo: dyadic_floor(&self.lo, prec),
                hi: dyadic_ceil(&self.hi, prec),
            }
        } else {
            self.clone()
        }
    }

    pub fn add(&self, other: &Self, prec: u32) -> Self {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
        .coarsen(prec)
    }

    pub fn sub(&self, other: &Self, prec: u32) -> Self {
        Interval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
        .coarsen(prec)
    }

    pub fn neg(&self) -> Self {
        Interval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn mul(&self, other: &Self, prec: u32) -> Self {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = candidates.iter().min().unwrap().clone();
        let hi = candidates.iter().max().unwrap().clone();
        Interval { lo, hi }.coarsen(prec)
    }

    /// Reciprocal; caller must ensure the interval excludes zero.
    pub fn recip(&self, prec: u32) -> Option<Self> {
        if self.contains_zero() {
            return None;
        }
        Some(
            Interval {
                lo: self.hi.recip(),
                hi: self.lo.recip(),
            }
            .coarsen(prec),
        )
    }

    pub fn div(&self, other: &Self, prec: u32) -> Option<Self> {
        Some(self.mul(&other.recip(prec)?, prec))
    }

    /// Square root with outward dyadic rounding. Negative lower bounds are
    /// clamped to zero: the tracked value is known nonnegative.
    pub fn sqrt(&self, prec: u32) -> Option<Self> {
        if self.hi.is_negative() {
            return None;
        }
        let lo_in = if self.lo.is_negative() { BigRational::zero() } else { self.lo.clone() };
        let scale = pow2(2 * prec);
        // floor sqrt of lo: isqrt(floor(lo * 4^prec)) / 2^prec
        let lo_scaled = (&lo_in * BigRational::from(scale.clone())).floor().to_integer();
        let lo = BigRational::new(isqrt(&lo_scaled), pow2(prec));
        // ceil sqrt of hi
        let hi_scaled = (&self.hi * BigRational::from(scale)).ceil().to_integer();
        let s = isqrt(&hi_scaled);
        let hi_root = if &s * &s == hi_scaled { s } else { s + 1 };
        let hi = BigRational::new(hi_root, pow2(prec));
        Some(Interval { lo, hi })
    }

    pub fn abs_upper(&self) -> BigRational {
        let a = self.lo.abs();
        let b = self.hi.abs();
        if a > b { a } else { b }
    }
}

/// Interval for a plain rational: exact point.
pub fn exact(x: &BigRational) -> Interval {
    Interval::point(x.clone())
}

/// Convenience: interval `[a/b, c/d]` for tests.
#[cfg(test)]
pub fn iv(a: i64, b: i64, c: i64, d: i64) -> Interval {
    Interval { lo: rat(a, b), hi: rat(c, d) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat_int;

    #[test]
    fn sqrt_brackets_value() {
        let two = exact(&rat_int(2));
        let r = two.sqrt(64).unwrap();
        // sqrt(2) = 1.41421356...
        assert!(r.lo < rat(141422, 100000));
        assert!(r.hi > rat(141421, 100000));
        assert!(r.width() < rat(1, 1 << 30));
    }

    #[test]
    fn mul_signs() {
        let a = iv(-1, 1, 2, 1);
        let b = iv(-3, 1, -1, 2);
        let p = a.mul(&b, 32);
        assert!(p.lo <= rat(-6, 1));
        assert!(p.hi >= rat(3, 1));
    }

    #[test]
    fn coarsen_keeps_containment() {
        let x = rat(1, 3);
        let i = Interval::point(x.clone()).coarsen(8);
        assert!(i.lo <= x && x <= i.hi);
    }
}
