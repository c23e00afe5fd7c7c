//! The two supported prime fields.

use crate::{Error, Result};

/// Order of the base field. Only GF(2) and GF(3) are supported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(try_from = "u32", into = "u32"))]
pub enum FieldOrder {
    Binary,
    Ternary,
}

impl FieldOrder {
    pub fn new(q: u32) -> Result<Self> {
        match q {
            2 => Ok(Self::Binary),
            3 => Ok(Self::Ternary),
            _ => Err(Error::UnsupportedField(q)),
        }
    }

    #[inline]
    pub const fn q(self) -> u8 {
        match self {
            Self::Binary => 2,
            Self::Ternary => 3,
        }
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        (a + b) % self.q()
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        (a + self.q() - b) % self.q()
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        (a * b) % self.q()
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        (self.q() - a) % self.q()
    }

    /// Multiplicative inverse of a nonzero element. In both fields every
    /// nonzero element is its own inverse.
    #[inline]
    pub fn inv(self, a: u8) -> u8 {
        debug_assert!(a != 0 && a < self.q());
        a
    }

    /// `q^e`, saturating at `u64::MAX`.
    pub fn pow(self, e: u32) -> u64 {
        (self.q() as u64).checked_pow(e).unwrap_or(u64::MAX)
    }
}

impl TryFrom<u32> for FieldOrder {
    type Error = Error;

    fn try_from(q: u32) -> Result<Self> {
        Self::new(q)
    }
}

impl From<FieldOrder> for u32 {
    fn from(f: FieldOrder) -> u32 {
        f.q() as u32
    }
}

impl core::fmt::Display for FieldOrder {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "GF({})", self.q())
    }
}
