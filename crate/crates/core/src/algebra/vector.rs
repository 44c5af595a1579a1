//! Bit-sliced vectors over GF(4) (and GF(2) as the `hi == 0` subset).
//!
//! Coordinate `i` of a vector is `lo_i + hi_i·w`. With this basis the trace of
//! a vector is its `hi` plane and its GC-weight is `popcount(hi)`.

use std::cmp::Ordering;
use std::fmt;

use crate::algebra::field::{Field, F4};
use crate::error::{Error, Result};

/// Largest supported code length.
pub const MAX_LEN: usize = 128;

#[inline]
pub(crate) fn mask(len: usize) -> u128 {
    if len >= 128 {
        u128::MAX
    } else {
        (1u128 << len) - 1
    }
}

#[inline]
fn parity(x: u128) -> u8 {
    (x.count_ones() & 1) as u8
}

/// A vector of length ≤ 128 over GF(4).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Vector {
    len: usize,
    lo: u128,
    hi: u128,
}

impl Vector {
    pub fn zeros(len: usize) -> Vector {
        assert!(len <= MAX_LEN, "vector length {len} exceeds {MAX_LEN}");
        Vector { len, lo: 0, hi: 0 }
    }

    pub fn try_zeros(len: usize) -> Result<Vector> {
        if len > MAX_LEN {
            return Err(Error::LengthTooLarge(len));
        }
        Ok(Vector::zeros(len))
    }

    pub fn ones(len: usize) -> Vector {
        let mut v = Vector::zeros(len);
        v.lo = mask(len);
        v
    }

    /// Builds a vector from raw planes; bits beyond `len` are cleared.
    #[inline]
    pub fn from_planes(len: usize, lo: u128, hi: u128) -> Vector {
        let m = mask(len);
        Vector { len, lo: lo & m, hi: hi & m }
    }

    /// Binary vector from a bit mask.
    #[inline]
    pub fn from_bits(len: usize, bits: u128) -> Vector {
        Vector::from_planes(len, bits, 0)
    }

    pub fn from_symbols(symbols: &[F4]) -> Vector {
        let mut v = Vector::zeros(symbols.len());
        for (i, &s) in symbols.iter().enumerate() {
            v.set(i, s);
        }
        v
    }

    /// Parses `0`, `1`, `w`, `W` characters; whitespace is ignored.
    pub fn parse(text: &str) -> Result<Vector> {
        let mut symbols = Vec::new();
        for (offset, c) in text.chars().enumerate() {
            if c.is_whitespace() || c == ',' {
                continue;
            }
            symbols.push(F4::from_char(c).ok_or(Error::BadSymbol { symbol: c, offset })?);
        }
        if symbols.len() > MAX_LEN {
            return Err(Error::LengthTooLarge(symbols.len()));
        }
        Ok(Vector::from_symbols(&symbols))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn lo(&self) -> u128 {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> u128 {
        self.hi
    }

    /// Bit mask of nonzero coordinates.
    #[inline]
    pub fn support(&self) -> u128 {
        self.lo | self.hi
    }

    #[inline]
    pub fn get(&self, i: usize) -> F4 {
        debug_assert!(i < self.len);
        F4::from_bits((((self.lo >> i) & 1) | (((self.hi >> i) & 1) << 1)) as u8)
    }

    #[inline]
    pub fn set(&mut self, i: usize, x: F4) {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        let bit = 1u128 << i;
        let b = x.bits();
        self.lo = (self.lo & !bit) | if b & 1 != 0 { bit } else { 0 };
        self.hi = (self.hi & !bit) | if b & 2 != 0 { bit } else { 0 };
    }

    pub fn symbols(&self) -> Vec<F4> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.support() == 0
    }

    #[inline]
    pub fn is_binary(&self) -> bool {
        self.hi == 0
    }

    pub fn in_field(&self, field: Field) -> bool {
        field == Field::F4 || self.is_binary()
    }

    /// Hamming weight.
    #[inline]
    pub fn weight(&self) -> u32 {
        self.support().count_ones()
    }

    /// Number of coordinates in {w, w²}, i.e. bases C or G.
    #[inline]
    pub fn gc_weight(&self) -> u32 {
        self.hi.count_ones()
    }

    #[inline]
    pub fn add(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.len, other.len);
        Vector { len: self.len, lo: self.lo ^ other.lo, hi: self.hi ^ other.hi }
    }

    #[inline]
    pub fn add_assign(&mut self, other: &Vector) {
        debug_assert_eq!(self.len, other.len);
        self.lo ^= other.lo;
        self.hi ^= other.hi;
    }

    /// Multiplication by a scalar.
    #[inline]
    pub fn scale(&self, c: F4) -> Vector {
        let (lo, hi) = match c {
            F4::Zero => (0, 0),
            F4::One => (self.lo, self.hi),
            // (a + b w) w = b + (a + b) w
            F4::W => (self.hi, self.lo ^ self.hi),
            // (a + b w) w² = (a + b) + a w
            F4::W2 => (self.lo ^ self.hi, self.lo),
        };
        Vector { len: self.len, lo, hi }
    }

    /// Coordinatewise trace, a binary vector.
    #[inline]
    pub fn trace(&self) -> Vector {
        Vector { len: self.len, lo: self.hi, hi: 0 }
    }

    /// Euclidean inner product Σ aᵢbᵢ.
    pub fn dot(&self, other: &Vector) -> F4 {
        let (a0, a1, b0, b1) = (self.lo, self.hi, other.lo, other.hi);
        let lo = parity(a0 & b0) ^ parity(a1 & b1);
        let hi = parity((a0 & b1) ^ (a1 & b0) ^ (a1 & b1));
        F4::from_bits(lo | hi << 1)
    }

    /// Coordinate reversal.
    pub fn reverse(&self) -> Vector {
        if self.len == 0 {
            return *self;
        }
        let shift = 128 - self.len as u32;
        Vector { len: self.len, lo: self.lo.reverse_bits() >> shift, hi: self.hi.reverse_bits() >> shift }
    }

    /// Adds the all-one vector (Watson-Crick complement under the DNA map).
    #[inline]
    pub fn complement(&self) -> Vector {
        Vector { len: self.len, lo: self.lo ^ mask(self.len), hi: self.hi }
    }

    pub fn reverse_complement(&self) -> Vector {
        self.reverse().complement()
    }

    /// Applies a coordinate permutation: output position `perm[i]` receives
    /// coordinate `i`.
    pub fn permute(&self, perm: &[usize]) -> Vector {
        assert_eq!(perm.len(), self.len);
        let mut out = Vector::zeros(self.len);
        for (i, &p) in perm.iter().enumerate() {
            out.set(p, self.get(i));
        }
        out
    }

    /// Hamming distance.
    #[inline]
    pub fn distance(&self, other: &Vector) -> u32 {
        self.add(other).weight()
    }

    /// Lexicographic comparison of the symbol strings, coordinate 0 first.
    pub fn lex_cmp(&self, other: &Vector) -> Ordering {
        self.len.cmp(&other.len).then_with(|| {
            let diff = self.support_diff(other);
            if diff == 0 {
                return Ordering::Equal;
            }
            let i = diff.trailing_zeros() as usize;
            self.get(i).cmp(&other.get(i))
        })
    }

    fn support_diff(&self, other: &Vector) -> u128 {
        (self.lo ^ other.lo) | (self.hi ^ other.hi)
    }
}

impl PartialOrd for Vector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Vector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lex_cmp(other)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", self.get(i).to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vector({self})")
    }
}

impl serde::Serialize for Vector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Vector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Vector::parse(&s).map_err(serde::de::Error::custom)
    }
}
