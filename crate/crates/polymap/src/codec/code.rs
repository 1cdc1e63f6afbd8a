//! Bit-string codes for integers, rationals and algebraic numbers, plus
//! exact arithmetic carried out directly on the codes.
//!
//! A nonnegative integer m is the unary string `0^m 1`. A rational
//! `(-1)^s p/q` is the triple `(s, p, q)` of nonnegative integers. A real
//! algebraic number is `(n, i, a_{n-1}, ..., a_0)`: the degree and real-root
//! index of its monic minimal polynomial followed by the coefficient
//! triples. Codes concatenate and remain self-delimiting.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::bits::{BitReader, BitString, BitsError};
use crate::exact::poly::MonicPoly;
use crate::exact::rational::{from_triple, to_triple};
use crate::exact::Real;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CodeError {
    #[error(transparent)]
    Bits(#[from] BitsError),
    #[error("rational is not in canonical form")]
    NonCanonicalRational,
    #[error("unary value too large to materialize")]
    UnaryOverflow,
    #[error("algebraic code does not describe a monic polynomial with enough real roots")]
    BadAlgebraic,
    #[error("operands of implicit arithmetic must be rational codes")]
    UnsupportedOperand,
    #[error("division by the code of zero")]
    DivisionByZero,
    #[error("square root of a negative code")]
    SqrtOfNegative,
}

/// `0^m 1`.
pub fn encode_uint(m: &BigInt) -> Result<BitString, CodeError> {
    let m = m.to_usize().ok_or(CodeError::UnaryOverflow)?;
    let mut bits = vec![false; m];
    bits.push(true);
    Ok(BitString::from_bits(bits))
}

pub fn encode_uint_usize(m: usize) -> BitString {
    let mut bits = vec![false; m];
    bits.push(true);
    BitString::from_bits(bits)
}

pub fn decode_uint(r: &mut BitReader) -> Result<BigInt, CodeError> {
    let mut m = BigInt::zero();
    loop {
        if r.read_bit()? {
            return Ok(m);
        }
        m += 1;
    }
}

/// Canonical triple `(s, p, q)`: gcd(p, q) = 1, q >= 1, s = 0 when p = 0.
pub fn encode_rational_triple(s: u8, p: &BigInt, q: &BigInt) -> Result<BitString, CodeError> {
    if q < &BigInt::one() || p.is_negative() || s > 1 || (p.is_zero() && s == 1) {
        return Err(CodeError::NonCanonicalRational);
    }
    if num_integer::gcd(p.clone(), q.clone()) != BigInt::one() && !p.is_zero() {
        return Err(CodeError::NonCanonicalRational);
    }
    if p.is_zero() && !q.is_one() {
        return Err(CodeError::NonCanonicalRational);
    }
    let mut out = encode_uint(&BigInt::from(s))?;
    out.extend(&encode_uint(p)?);
    out.extend(&encode_uint(q)?);
    Ok(out)
}

pub fn encode_rational(x: &BigRational) -> Result<BitString, CodeError> {
    let (s, p, q) = to_triple(x);
    encode_rational_triple(s, &p, &q)
}

pub fn decode_rational(r: &mut BitReader) -> Result<BigRational, CodeError> {
    let s = decode_uint(r)?;
    let p = decode_uint(r)?;
    let q = decode_uint(r)?;
    let s = s.to_u8().filter(|&s| s <= 1).ok_or(CodeError::NonCanonicalRational)?;
    if q.is_zero() {
        return Err(CodeError::NonCanonicalRational);
    }
    if (!p.is_zero() && num_integer::gcd(p.clone(), q.clone()) != BigInt::one())
        || (p.is_zero() && (s == 1 || !q.is_one()))
    {
        return Err(CodeError::NonCanonicalRational);
    }
    Ok(from_triple(s, p, q))
}

/// Representation `(n, i, a_{n-1}, ..., a_0)` of a real algebraic number:
/// the i-th smallest real root of the monic minimal polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicCode {
    pub degree: usize,
    pub root_index: usize,
    /// Non-leading coefficients in descending order.
    pub coefficients: Vec<BigRational>,
}

impl AlgebraicCode {
    pub fn minimal_polynomial(&self) -> Result<MonicPoly, CodeError> {
        MonicPoly::from_descending_tail(&self.coefficients).map_err(|_| CodeError::BadAlgebraic)
    }

    pub fn validate(&self) -> Result<(), CodeError> {
        if self.degree == 0 || self.coefficients.len() != self.degree || self.root_index == 0 {
            return Err(CodeError::BadAlgebraic);
        }
        let p = self.minimal_polynomial()?;
        if p.count_real_roots() < self.root_index {
            return Err(CodeError::BadAlgebraic);
        }
        Ok(())
    }
}

pub fn encode_algebraic(c: &AlgebraicCode) -> Result<BitString, CodeError> {
    c.validate()?;
    let mut out = encode_uint(&BigInt::from(c.degree))?;
    out.extend(&encode_uint(&BigInt::from(c.root_index))?);
    for a in &c.coefficients {
        out.extend(&encode_rational(a)?);
    }
    Ok(out)
}

/// A number code: rational or algebraic-by-minimal-polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NumberCode {
    Rational(BigRational),
    Algebraic(AlgebraicCode),
}

impl NumberCode {
    pub fn encode(&self) -> Result<BitString, CodeError> {
        match self {
            // A rational `x` is degree-1: minimal polynomial `t - x`,
            // root index 1. The bare triple form is used when the context
            // fixes the value as rational; the tagged form goes through
            // `encode` on `Algebraic`.
            NumberCode::Rational(x) => encode_rational(x),
            NumberCode::Algebraic(c) => encode_algebraic(c),
        }
    }
}

fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    let ns = x.numer().sqrt();
    let ds = x.denom().sqrt();
    if &(&ns * &ns) == x.numer() && &(&ds * &ds) == x.denom() {
        Some(BigRational::new(ns, ds))
    } else {
        None
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Sqrt,
}

/// Arithmetic on the implicit form. Both operands must be rational codes;
/// square root of a non-square rational yields the degree-2 algebraic code
/// with the correct root index.
pub fn implicit_arith(
    a: &BitString,
    b: Option<&BitString>,
    op: ArithOp,
) -> Result<BitString, CodeError> {
    let mut ra = BitReader::new(a);
    let x = decode_rational(&mut ra)?;
    ra.finish()?;
    let y = match b {
        Some(b) => {
            let mut rb = BitReader::new(b);
            let y = decode_rational(&mut rb)?;
            rb.finish()?;
            Some(y)
        }
        None => None,
    };
    let result = match op {
        ArithOp::Add => NumberCode::Rational(x + y.ok_or(CodeError::UnsupportedOperand)?),
        ArithOp::Sub => NumberCode::Rational(x - y.ok_or(CodeError::UnsupportedOperand)?),
        ArithOp::Mul => NumberCode::Rational(x * y.ok_or(CodeError::UnsupportedOperand)?),
        ArithOp::Div => {
            let y = y.ok_or(CodeError::UnsupportedOperand)?;
            if y.is_zero() {
                return Err(CodeError::DivisionByZero);
            }
            NumberCode::Rational(x / y)
        }
        ArithOp::Sqrt => {
            if x.is_negative() {
                return Err(CodeError::SqrtOfNegative);
            }
            match rational_sqrt(&x) {
                Some(r) => NumberCode::Rational(r),
                None => {
                    // Minimal polynomial t^2 - x; the positive root is the
                    // larger of the two real roots.
                    NumberCode::Algebraic(AlgebraicCode {
                        degree: 2,
                        root_index: 2,
                        coefficients: vec![BigRational::zero(), -x],
                    })
                }
            }
        }
    };
    result.encode()
}

/// Exact rational recognition of a constructible real.
pub fn recognize_rational(x: &Real) -> Option<(u8, BigInt, BigInt)> {
    x.to_rational().map(|r| to_triple(&r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, rat_int};

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    #[test]
    fn uint_examples() {
        assert_eq!(encode_uint(&BigInt::zero()).unwrap(), bs("1"));
        assert_eq!(encode_uint(&BigInt::from(3)).unwrap(), bs("0001"));
        assert_eq!(encode_uint(&BigInt::one()).unwrap(), bs("01"));
    }

    #[test]
    fn rational_code_examples() {
        assert_eq!(encode_rational(&rat_int(3)).unwrap(), bs("1000101"));
        assert_eq!(encode_rational(&rat_int(0)).unwrap(), bs("1101"));
        let c = AlgebraicCode {
            degree: 1,
            root_index: 1,
            coefficients: vec![rat_int(-3)],
        };
        assert_eq!(encode_algebraic(&c).unwrap(), bs("010101000101"));
    }

    #[test]
    fn non_canonical_rejected() {
        assert!(encode_rational_triple(0, &BigInt::from(2), &BigInt::from(4)).is_err());
        assert!(encode_rational_triple(1, &BigInt::zero(), &BigInt::one()).is_err());
    }

    #[test]
    fn implicit_add_and_mul() {
        let three = encode_rational(&rat_int(3)).unwrap();
        let half = encode_rational(&rat(1, 2)).unwrap();
        let sum = implicit_arith(&three, Some(&half), ArithOp::Add).unwrap();
        assert_eq!(sum, encode_rational(&rat(7, 2)).unwrap());

        let zero = encode_rational(&rat_int(0)).unwrap();
        let prod = implicit_arith(&three, Some(&zero), ArithOp::Mul).unwrap();
        assert_eq!(prod, zero);
    }

    #[test]
    fn implicit_sqrt_of_two() {
        let two = encode_rational(&rat_int(2)).unwrap();
        let r = implicit_arith(&two, None, ArithOp::Sqrt).unwrap();
        let expected = encode_algebraic(&AlgebraicCode {
            degree: 2,
            root_index: 2,
            coefficients: vec![rat_int(0), rat_int(-2)],
        })
        .unwrap();
        assert_eq!(r, expected);
    }

    #[test]
    fn recognize_rational_cases() {
        let x = Real::from_rational(rat(6, 4));
        assert_eq!(
            recognize_rational(&x),
            Some((0, BigInt::from(3), BigInt::from(2)))
        );
        let s2 = Real::from_int(2).sqrt().unwrap();
        assert_eq!(recognize_rational(&s2), None);
        let prod = s2.mul(&s2);
        assert_eq!(
            recognize_rational(&prod),
            Some((0, BigInt::from(2), BigInt::one()))
        );
    }
}
