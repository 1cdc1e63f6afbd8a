//! The dyadic embedding `r(beta, lambda)`: the real in (0,1) whose binary
//! expansion is `0.0^lambda 1 beta`, and its exact inverse.
//!
//! Halving the value increments lambda and leaves beta untouched, which is
//! what lets the robot re-encode the same memory at arbitrarily small
//! distances and angles.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::bits::BitString;
use crate::exact::Real;

/// A value in (0,1) with finite binary expansion `0.0^lambda 1 payload`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dyadic {
    pub value: BigRational,
    pub lambda: u32,
    pub payload: BitString,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum DyadicError {
    #[error("payload must be nonempty")]
    EmptyPayload,
    #[error("value outside (0,1) cannot carry a code")]
    OutOfRange,
    #[error("value has no terminating binary expansion")]
    NonTerminating,
    #[error("expansion exceeds the bit budget")]
    BudgetExceeded,
}

/// Bits of extracted expansions are capped; a longer expansion signals a
/// corrupted position, not a legitimate code.
pub const EXTRACT_BIT_BUDGET: usize = 1 << 20;

/// `r(payload, lambda)` as an exact rational.
pub fn embed_value(payload: &BitString, lambda: u32) -> Result<BigRational, DyadicError> {
    if payload.is_empty() {
        return Err(DyadicError::EmptyPayload);
    }
    let mut numer = BigInt::one();
    for &b in payload.bits() {
        numer <<= 1;
        if b {
            numer += 1;
        }
    }
    let denom = BigInt::one() << (lambda as usize + 1 + payload.len());
    Ok(BigRational::new(numer, denom))
}

pub fn embed(payload: &BitString, lambda: u32) -> Result<Dyadic, DyadicError> {
    Ok(Dyadic {
        value: embed_value(payload, lambda)?,
        lambda,
        payload: payload.clone(),
    })
}

/// Inverse of `embed` on an exact rational.
pub fn extract_rational(d: &BigRational) -> Result<(u32, BitString), DyadicError> {
    if !d.is_positive() || d >= &BigRational::one() {
        return Err(DyadicError::OutOfRange);
    }
    // Terminating expansion iff the denominator is a power of two.
    let denom = d.denom();
    let k = denom.bits() as usize - 1;
    if &(BigInt::one() << k) != denom {
        return Err(DyadicError::NonTerminating);
    }
    if k > EXTRACT_BIT_BUDGET {
        return Err(DyadicError::BudgetExceeded);
    }
    // d = p / 2^k with p odd, 0 < p < 2^k. The expansion has exactly k bits:
    // the binary digits of p left-padded with zeros to width k.
    let p = d.numer();
    let width = p.bits() as usize;
    let lambda = (k - width) as u32;
    // Drop the leading 1; the rest is the payload.
    let mut payload = BitString::new();
    for i in (0..width.saturating_sub(1)).rev() {
        payload.push(p.bit(i as u64));
    }
    if payload.is_empty() {
        return Err(DyadicError::EmptyPayload);
    }
    Ok((lambda, payload))
}

/// Inverse of `embed` on an exact real presented in any constructible form.
pub fn extract(d: &Real) -> Result<(u32, BitString), DyadicError> {
    if !d.is_positive() || !d.sub(&Real::one()).is_negative() {
        return Err(DyadicError::OutOfRange);
    }
    // An irrational value has no terminating expansion; deciding
    // rationality exactly avoids peeling bits forever.
    let r = d.to_rational().ok_or(DyadicError::NonTerminating)?;
    extract_rational(&r)
}

/// Convenience probe: Some((lambda, payload)) only for a well-formed code.
pub fn try_extract(d: &Real) -> Option<(u32, BitString)> {
    extract(d).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    #[test]
    fn embed_examples() {
        assert_eq!(embed_value(&bs("101"), 2).unwrap(), rat(13, 64));
        assert_eq!(embed_value(&bs("1"), 0).unwrap(), rat(3, 4));
        // scaling: embed(beta, lambda+1) = embed(beta, lambda)/2
        assert_eq!(embed_value(&bs("101"), 3).unwrap(), rat(13, 128));
    }

    #[test]
    fn extract_examples() {
        assert_eq!(extract_rational(&rat(13, 64)).unwrap(), (2, bs("101")));
        assert_eq!(extract_rational(&rat(3, 4)).unwrap(), (0, bs("1")));
        assert_eq!(extract_rational(&rat(1, 2)), Err(DyadicError::EmptyPayload));
        assert_eq!(extract_rational(&rat(1, 3)), Err(DyadicError::NonTerminating));
        assert_eq!(extract_rational(&rat(5, 4)), Err(DyadicError::OutOfRange));
    }

    #[test]
    fn extract_on_reals() {
        let v = Real::from_rational(rat(13, 64));
        assert_eq!(extract(&v).unwrap(), (2, bs("101")));
        let s2 = Real::from_int(2).sqrt().unwrap();
        let half_s2 = s2.div(&Real::from_int(2)).unwrap();
        assert_eq!(extract(&half_s2), Err(DyadicError::NonTerminating));
        // An irrational expression with rational value still extracts.
        let two = s2.mul(&s2); // exactly 2
        let v = two.div(&Real::from_int(4)).unwrap().mul(&Real::from_rational(rat(3, 2)));
        assert_eq!(extract(&v).unwrap(), (0, bs("1")));
    }
}
