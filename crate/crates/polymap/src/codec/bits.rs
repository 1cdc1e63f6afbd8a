//! Finite bit strings and a reader for self-delimiting decodes.

use std::fmt;
use std::str::FromStr;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BitString {
    bits: Vec<bool>,
}

impl BitString {
    pub fn new() -> Self {
        BitString { bits: Vec::new() }
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        BitString { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn push(&mut self, bit: bool) {
        self.bits.push(bit);
    }

    pub fn extend(&mut self, other: &BitString) {
        self.bits.extend_from_slice(&other.bits);
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn flip(&mut self, index: usize) {
        self.bits[index] = !self.bits[index];
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum BitsError {
    #[error("bit string contains a character other than 0/1")]
    BadChar,
    #[error("unexpected end of bit string")]
    Truncated,
    #[error("trailing bits after a complete decode")]
    TrailingBits,
    #[error("non-canonical field in decoded value")]
    NonCanonical,
}

impl FromStr for BitString {
    type Err = BitsError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => return Err(BitsError::BadChar),
            }
        }
        Ok(BitString { bits })
    }
}

/// Cursor over a bit string for sequential decoding.
pub struct BitReader<'a> {
    bits: &'a [bool],
    pos: usize,
}

impl<'a> BitReader<'a> {
    pub fn new(b: &'a BitString) -> Self {
        BitReader { bits: &b.bits, pos: 0 }
    }

    pub fn read_bit(&mut self) -> Result<bool, BitsError> {
        let b = *self.bits.get(self.pos).ok_or(BitsError::Truncated)?;
        self.pos += 1;
        Ok(b)
    }

    pub fn remaining(&self) -> usize {
        self.bits.len() - self.pos
    }

    pub fn finish(self) -> Result<(), BitsError> {
        if self.remaining() == 0 {
            Ok(())
        } else {
            Err(BitsError::TrailingBits)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let b: BitString = "0101".parse().unwrap();
        assert_eq!(b.to_string(), "0101");
        assert!("012".parse::<BitString>().is_err());
    }
}
