use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{Vector, F4, MAX_LEN};
use crate::error::{Error, Result};

/// A word over {A, C, G, T}.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DnaString(Vec<u8>);

fn base_of(x: F4) -> u8 {
    match x {
        F4::Zero => b'A',
        F4::One => b'T',
        F4::W => b'C',
        F4::W2 => b'G',
    }
}

fn symbol_of(b: u8) -> Option<F4> {
    match b {
        b'A' => Some(F4::Zero),
        b'T' => Some(F4::One),
        b'C' => Some(F4::W),
        b'G' => Some(F4::W2),
        _ => None,
    }
}

fn complement_base(b: u8) -> u8 {
    match b {
        b'A' => b'T',
        b'T' => b'A',
        b'C' => b'G',
        _ => b'C',
    }
}

impl DnaString {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("ASCII bases")
    }

    pub fn reverse(&self) -> DnaString {
        DnaString(self.0.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> DnaString {
        DnaString(self.0.iter().map(|&b| complement_base(b)).collect())
    }

    pub fn reverse_complement(&self) -> DnaString {
        DnaString(self.0.iter().rev().map(|&b| complement_base(b)).collect())
    }

    /// Number of C and G bases.
    pub fn gc_count(&self) -> usize {
        self.0.iter().filter(|&&b| b == b'C' || b == b'G').count()
    }
}

impl FromStr for DnaString {
    type Err = Error;

    fn from_str(s: &str) -> Result<DnaString> {
        let mut bases = Vec::with_capacity(s.len());
        for (offset, c) in s.chars().enumerate() {
            let u = c.to_ascii_uppercase();
            if !matches!(u, 'A' | 'C' | 'G' | 'T') {
                return Err(Error::BadSymbol { symbol: c, offset });
            }
            bases.push(u as u8);
        }
        Ok(DnaString(bases))
    }
}

impl fmt::Display for DnaString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for DnaString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DnaString({})", self.as_str())
    }
}

impl Serialize for DnaString {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for DnaString {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<DnaString, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// 0 ↦ A, 1 ↦ T, w ↦ C, w² ↦ G, coordinatewise.
pub fn encode_dna(v: &Vector) -> DnaString {
    DnaString(v.symbols().into_iter().map(base_of).collect())
}

pub fn decode_dna(s: &DnaString) -> Result<Vector> {
    if s.len() > MAX_LEN {
        return Err(Error::LengthTooLarge(s.len()));
    }
    let symbols: Vec<F4> = s.0.iter().map(|&b| symbol_of(b).expect("validated bases")).collect();
    Ok(Vector::from_symbols(&symbols))
}

/// Images of a word under reversal and complementation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RcTransforms {
    pub reverse: Vector,
    pub complement: Vector,
    pub reverse_complement: Vector,
}

pub fn rc_transforms(v: &Vector) -> RcTransforms {
    RcTransforms { reverse: v.reverse(), complement: v.complement(), reverse_complement: v.reverse_complement() }
}
