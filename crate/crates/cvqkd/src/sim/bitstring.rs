//! Plain bit sequences.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An ordered sequence of bits, stored one per byte (values 0 or 1).
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BitString {
    bits: Vec<u8>,
}

impl BitString {
    pub fn new() -> Self {
        Self::default()
    }

    /// Wrap raw bits; every element must be 0 or 1.
    pub fn from_bits(bits: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::Domain {
                what: "bit value",
                value: bad as f64,
            });
        }
        Ok(Self { bits })
    }

    pub fn push(&mut self, bit: u8) {
        debug_assert!(bit <= 1);
        self.bits.push(bit & 1);
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bit(&self, i: usize) -> u8 {
        self.bits[i]
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.bits
    }

    /// Number of positions where the two strings disagree.
    pub fn mismatches(&self, other: &Self) -> Result<usize> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(self
            .bits
            .iter()
            .zip(&other.bits)
            .filter(|(a, b)| a != b)
            .count())
    }

    /// Mismatch fraction against an equal-length string.
    pub fn error_rate(&self, other: &Self) -> Result<f64> {
        let m = self.mismatches(other)?;
        if self.is_empty() {
            return Ok(0.0);
        }
        Ok(m as f64 / self.len() as f64)
    }

    /// XOR of the bits at the given positions.
    pub fn xor_block(&self, positions: &[usize]) -> u8 {
        positions.iter().fold(0u8, |acc, &p| acc ^ self.bits[p])
    }
}

impl FromIterator<u8> for BitString {
    fn from_iter<I: IntoIterator<Item = u8>>(iter: I) -> Self {
        Self {
            bits: iter.into_iter().map(|b| b & 1).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        let a = BitString::from_bits(vec![0, 1, 1, 0]).unwrap();
        let b = BitString::from_bits(vec![0, 1, 0, 0]).unwrap();
        assert_eq!(a.len(), 4);
        assert_eq!(a.mismatches(&b).unwrap(), 1);
        assert_eq!(a.error_rate(&b).unwrap(), 0.25);
        assert_eq!(a.xor_block(&[0, 1, 2]), 0);
        assert_eq!(a.xor_block(&[1, 3]), 1);
        assert!(BitString::from_bits(vec![0, 2]).is_err());
        let c = BitString::from_bits(vec![1]).unwrap();
        assert!(a.mismatches(&c).is_err());
    }
}
