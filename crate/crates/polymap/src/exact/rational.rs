//! Helpers around `BigRational`: construction, parsing, canonical text form.
//!
//! Rationals serialize as `p/q` with q > 0 and gcd(|p|, q) = 1, which is the
//! canonical form `BigRational` maintains by construction.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

/// Power of two as a rational, `2^-k` for negative `k` allowed via `pow2(-k)`.
pub fn pow2_rat(k: i64) -> BigRational {
    if k >= 0 {
        BigRational::from(BigInt::one() << (k as u64))
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << ((-k) as u64))
    }
}

/// Canonical `p/q` text form used in every file format.
pub fn format_rational(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("malformed rational literal `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Accepts `p/q` or a bare integer `p`.
pub fn parse_rational(s: &str) -> Result<BigRational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    match s.split_once('/') {
        None => BigInt::from_str(s)
            .map(BigRational::from)
            .map_err(|_| ParseRationalError::Malformed(s.to_string())),
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim())
                .map_err(|_| ParseRationalError::Malformed(s.to_string()))?;
            let q = BigInt::from_str(q.trim())
                .map_err(|_| ParseRationalError::Malformed(s.to_string()))?;
            if q.is_zero() {
                return Err(ParseRationalError::ZeroDenominator(s.to_string()));
            }
            Ok(BigRational::new(p, q))
        }
    }
}

/// The `(s, p, q)` triple of nonnegative integers representing `(-1)^s p/q`.
pub fn to_triple(x: &BigRational) -> (u8, BigInt, BigInt) {
    let s = if x.is_negative() { 1 } else { 0 };
    (s, x.numer().abs(), x.denom().clone())
}

pub fn from_triple(s: u8, p: BigInt, q: BigInt) -> BigRational {
    let mag = BigRational::new(p, q);
    if s == 1 {
        -mag
    } else {
        mag
    }
}

/// True if `x = k / 2^m` for some integer k and m >= 0.
pub fn is_dyadic(x: &BigRational) -> bool {
    let mut d = x.denom().clone();
    while d.is_even() {
        d >>= 1;
    }
    d.is_one()
}

use num_integer::Integer;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_roundtrip() {
        for s in ["3/4", "-7/2", "0/1", "5"] {
            let x = parse_rational(s).unwrap();
            let y = parse_rational(&format_rational(&x)).unwrap();
            assert_eq!(x, y);
        }
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
    }

    #[test]
    fn triples_are_canonical() {
        let x = rat(-6, 4);
        let (s, p, q) = to_triple(&x);
        assert_eq!((s, p, q), (1, BigInt::from(3), BigInt::from(2)));
        assert_eq!(from_triple(1, BigInt::from(3), BigInt::from(2)), x);
    }

    #[test]
    fn dyadic_detection() {
        assert!(is_dyadic(&rat(13, 64)));
        assert!(!is_dyadic(&rat(1, 3)));
        assert!(is_dyadic(&rat_int(5)));
    }
}
