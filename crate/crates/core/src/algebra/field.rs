//! Scalars of GF(2) and GF(4).
//!
//! GF(4) = {0, 1, w, w²} with w² = w + 1. An element a + b·w is stored as the
//! two-bit integer `a | b << 1`, so addition is XOR and the trace
//! Tr(x) = x + x² is simply the `b` bit.

use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which coefficient field a vector, matrix or code lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    F2,
    F4,
}

impl Field {
    pub fn size(self) -> u32 {
        match self {
            Field::F2 => 2,
            Field::F4 => 4,
        }
    }

    /// Dimension over GF(2).
    pub fn degree(self) -> u32 {
        match self {
            Field::F2 => 1,
            Field::F4 => 2,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::F2 => "F2",
            Field::F4 => "F4",
        })
    }
}

impl std::str::FromStr for Field {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "F2" | "f2" | "GF2" => Ok(Field::F2),
            "F4" | "f4" | "GF4" => Ok(Field::F4),
            other => Err(format!("unknown field {other:?}, expected F2 or F4")),
        }
    }
}

/// An element of GF(4). GF(2) elements are the subset {0, 1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
#[repr(u8)]
pub enum F4 {
    #[default]
    Zero = 0,
    One = 1,
    W = 2,
    W2 = 3,
}

impl F4 {
    pub const ALL: [F4; 4] = [F4::Zero, F4::One, F4::W, F4::W2];
    pub const NONZERO: [F4; 3] = [F4::One, F4::W, F4::W2];

    #[inline]
    pub fn from_bits(bits: u8) -> F4 {
        match bits & 3 {
            0 => F4::Zero,
            1 => F4::One,
            2 => F4::W,
            _ => F4::W2,
        }
    }

    #[inline]
    pub fn bits(self) -> u8 {
        self as u8
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self == F4::Zero
    }

    /// Absolute trace x + x², landing in {0, 1}.
    #[inline]
    pub fn trace(self) -> F4 {
        F4::from_bits(self.bits() >> 1)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self) -> Option<F4> {
        match self {
            F4::Zero => None,
            F4::One => Some(F4::One),
            F4::W => Some(F4::W2),
            F4::W2 => Some(F4::W),
        }
    }

    /// Watson-Crick complement under the DNA correspondence: x + 1.
    #[inline]
    pub fn complement(self) -> F4 {
        F4::from_bits(self.bits() ^ 1)
    }

    pub fn in_f2(self) -> bool {
        self.bits() < 2
    }

    /// Character used by the code file format: `0`, `1`, `w`, `W` (= w²).
    pub fn to_char(self) -> char {
        match self {
            F4::Zero => '0',
            F4::One => '1',
            F4::W => 'w',
            F4::W2 => 'W',
        }
    }

    pub fn from_char(c: char) -> Option<F4> {
        match c {
            '0' => Some(F4::Zero),
            '1' => Some(F4::One),
            'w' => Some(F4::W),
            'W' => Some(F4::W2),
            _ => None,
        }
    }

    fn log(self) -> Option<u8> {
        match self {
            F4::Zero => None,
            F4::One => Some(0),
            F4::W => Some(1),
            F4::W2 => Some(2),
        }
    }

    fn exp(e: u8) -> F4 {
        [F4::One, F4::W, F4::W2][(e % 3) as usize]
    }

    /// Checks that the element belongs to `field`.
    pub fn check_field(self, field: Field, offset: usize) -> Result<()> {
        if field == Field::F2 && !self.in_f2() {
            return Err(Error::BadSymbol { symbol: self.to_char(), offset });
        }
        Ok(())
    }
}

impl Add for F4 {
    type Output = F4;
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: F4) -> F4 {
        F4::from_bits(self.bits() ^ rhs.bits())
    }
}

impl Mul for F4 {
    type Output = F4;
    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: F4) -> F4 {
        match (self.log(), rhs.log()) {
            (Some(a), Some(b)) => F4::exp(a + b),
            _ => F4::Zero,
        }
    }
}

impl fmt::Display for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            F4::Zero => "0",
            F4::One => "1",
            F4::W => "w",
            F4::W2 => "w²",
        })
    }
}

/// Trace from GF(4) to GF(2).
pub fn f4_trace(x: F4) -> F4 {
    x.trace()
}
