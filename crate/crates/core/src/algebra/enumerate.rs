//! Gray-code enumeration of GF(2)-spans.
//!
//! A GF(4) code of dimension k is a GF(2) space of dimension 2k with basis
//! {g₁…g_k, w·g₁…w·g_k}; walking the binary reflected Gray code over that
//! basis visits every codeword once with a single vector addition per step.

use rayon::prelude::*;

use crate::algebra::vector::Vector;
use crate::error::{Error, Result};

/// Default enumeration budget in words.
pub const DEFAULT_CAP: u64 = 1 << 28;

/// Checks that a span of GF(2)-dimension `dim` fits in `cap` words.
pub fn check_cap(dim: usize, cap: u64) -> Result<u64> {
    if dim >= 64 || (1u64 << dim) > cap {
        return Err(Error::CapExceeded { needed_log2: dim as u32, cap });
    }
    Ok(1u64 << dim)
}

/// Streaming iterator over the GF(2)-span of a basis, zero word first.
#[derive(Clone, Debug)]
pub struct Codewords {
    basis: Vec<Vector>,
    index: u64,
    total: u64,
    current: Vector,
}

impl Codewords {
    pub(crate) fn new(len: usize, basis: Vec<Vector>) -> Codewords {
        assert!(basis.len() < 64);
        let total = 1u64 << basis.len();
        Codewords { basis, index: 0, total, current: Vector::zeros(len) }
    }
}

impl Iterator for Codewords {
    type Item = Vector;

    #[inline]
    fn next(&mut self) -> Option<Vector> {
        if self.index == self.total {
            return None;
        }
        if self.index > 0 {
            let b = self.index.trailing_zeros() as usize;
            self.current.add_assign(&self.basis[b]);
        }
        self.index += 1;
        Some(self.current)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.index) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Codewords {}

/// Visits the words of chunk `chunk` when the span is split on its top
/// `chunk_bits` basis vectors.
#[inline]
pub(crate) fn for_each_in_chunk<F: FnMut(&Vector)>(
    len: usize,
    basis: &[Vector],
    chunk_bits: usize,
    chunk: u64,
    mut f: F,
) {
    let low = basis.len() - chunk_bits;
    let mut start = Vector::zeros(len);
    for (i, b) in basis[low..].iter().enumerate() {
        if chunk >> i & 1 == 1 {
            start.add_assign(b);
        }
    }
    let mut cur = start;
    f(&cur);
    let steps = 1u64 << low;
    for idx in 1..steps {
        cur.add_assign(&basis[idx.trailing_zeros() as usize]);
        f(&cur);
    }
}

/// Folds over every word of the span in parallel; `merge` must be
/// associative and commutative so the result does not depend on the split.
pub(crate) fn par_fold<T, I, F, M>(len: usize, basis: &[Vector], init: I, visit: F, merge: M) -> T
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(&mut T, &Vector) + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    let chunk_bits = basis.len().saturating_sub(14).min(8);
    let chunks = 1u64 << chunk_bits;
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut acc = init();
            for_each_in_chunk(len, basis, chunk_bits, c, |v| visit(&mut acc, v));
            acc
        })
        .reduce(&init, &merge)
}
