//! The candidate generator vectors x ∈ GF(4)ⁿ of prescribed weights.
//!
//! Candidates of weight w are ranked as `support_rank · 3ʷ + pattern`,
//! where `support_rank` is the colexicographic rank of the support set and
//! the base-3 digits of `pattern` pick the nonzero symbols (1, w, w²) along
//! the support in increasing position order, lowest position first. Ranges
//! of ranks split the space without enumerating it.

use serde::{Deserialize, Serialize};

use crate::algebra::{Vector, F4, MAX_LEN};
use crate::error::{Error, Result};

/// Binomial coefficient in u64; panics on overflow, which cannot happen for
/// n ≤ 128 and the weights a search uses in practice.
pub fn binomial_u64(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial fits in u64")
}

/// All vectors of length `n` whose weight lies in `weights`, ranked by
/// weight block (in the listed order) and then as described above.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateSpace {
    n: usize,
    weights: Vec<usize>,
    offsets: Vec<u64>,
    total: u64,
}

impl CandidateSpace {
    pub fn new(n: usize, weights: &[usize]) -> Result<CandidateSpace> {
        if n > MAX_LEN {
            return Err(Error::LengthTooLarge(n));
        }
        let mut offsets = Vec::with_capacity(weights.len());
        let mut total: u64 = 0;
        for &w in weights {
            if w > n {
                return Err(Error::BadRange(format!("weight {w} exceeds length {n}")));
            }
            offsets.push(total);
            let block = 3u64
                .checked_pow(w as u32)
                .and_then(|p| p.checked_mul(binomial_u64(n, w)))
                .and_then(|b| b.checked_add(total))
                .ok_or_else(|| Error::BadRange("candidate space exceeds 2^64".into()))?;
            total = block;
        }
        Ok(CandidateSpace { n, weights: weights.to_vec(), offsets, total })
    }

    /// Weight-`d` vectors only.
    pub fn single(n: usize, d: usize) -> Result<CandidateSpace> {
        CandidateSpace::new(n, &[d])
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    /// Number of candidates.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Candidate of the given rank.
    pub fn unrank(&self, rank: u64) -> Vector {
        assert!(rank < self.total, "rank {rank} out of range");
        let b = self.offsets.partition_point(|&o| o <= rank) - 1;
        let w = self.weights[b];
        let local = rank - self.offsets[b];
        let patterns = 3u64.pow(w as u32);
        let support = unrank_colex(self.n, w, local / patterns);
        let mut pattern = local % patterns;
        let mut v = Vector::zeros(self.n);
        for &p in &support {
            v.set(p, [F4::One, F4::W, F4::W2][(pattern % 3) as usize]);
            pattern /= 3;
        }
        v
    }

    /// Whether the first nonzero symbol of the candidate of this rank is 1.
    /// Scalar multiples generate the same group code, and the normalized one
    /// is the smallest of the three.
    pub fn is_normalized(&self, rank: u64) -> bool {
        let b = self.offsets.partition_point(|&o| o <= rank) - 1;
        let w = self.weights[b];
        w == 0 || (rank - self.offsets[b]).is_multiple_of(3)
    }

    /// Iterator over the candidates with rank in `range`.
    pub fn iter_range(&self, range: CandidateRange) -> impl Iterator<Item = Vector> + '_ {
        let end = range.end.min(self.total);
        (range.start.min(end)..end).map(move |r| self.unrank(r))
    }

    /// Splits `[0, total)` into consecutive ranges of at most `size` ranks.
    pub fn chunks(&self, size: u64) -> Vec<CandidateRange> {
        let size = size.max(1);
        (0..self.total.div_ceil(size))
            .map(|i| CandidateRange { start: i * size, end: ((i + 1) * size).min(self.total) })
            .collect()
    }
}

/// Half-open range of candidate ranks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CandidateRange {
    pub start: u64,
    pub end: u64,
}

impl CandidateRange {
    pub fn new(start: u64, end: u64) -> CandidateRange {
        CandidateRange { start, end: end.max(start) }
    }

    pub fn len(&self) -> u64 {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end == self.start
    }
}

/// The `k`-subset of `0..n` with colexicographic rank `rank`, increasing.
fn unrank_colex(n: usize, k: usize, mut rank: u64) -> Vec<usize> {
    let mut out = vec![0; k];
    let mut top = n;
    for i in (0..k).rev() {
        // largest c < top with C(c, i + 1) <= rank
        let mut c = i;
        while c + 1 < top && binomial_u64(c + 1, i + 1) <= rank {
            c += 1;
        }
        rank -= binomial_u64(c, i + 1);
        out[i] = c;
        top = c;
    }
    out
}

/// Candidates of weight `d` and length `n` with rank in `range`.
pub fn enumerate_candidates(n: usize, d: usize, range: CandidateRange) -> Result<Vec<Vector>> {
    let space = CandidateSpace::single(n, d)?;
    Ok(space.iter_range(range).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn counts() {
        assert_eq!(CandidateSpace::single(10, 4).unwrap().total(), 17010);
        assert_eq!(CandidateSpace::single(12, 6).unwrap().total(), 924 * 729);
        let zero = CandidateSpace::single(5, 0).unwrap();
        assert_eq!(zero.total(), 1);
        assert_eq!(zero.unrank(0), Vector::zeros(5));
        assert_eq!(CandidateSpace::new(6, &[2, 3]).unwrap().total(), 15 * 9 + 20 * 27);
        assert!(CandidateSpace::single(4, 5).is_err());
    }

    #[test]
    fn ranks_are_a_bijection() {
        let space = CandidateSpace::new(7, &[3, 4]).unwrap();
        let all: Vec<Vector> = space.iter_range(CandidateRange::new(0, space.total())).collect();
        let set: HashSet<Vector> = all.iter().copied().collect();
        assert_eq!(set.len() as u64, space.total());
        for (r, v) in all.iter().enumerate() {
            assert!(v.weight() == 3 || v.weight() == 4);
            let first = v.get(v.support().trailing_zeros() as usize);
            assert_eq!(space.is_normalized(r as u64), first == F4::One);
        }
    }

    #[test]
    fn chunks_partition() {
        let space = CandidateSpace::single(10, 4).unwrap();
        let mut seen = HashSet::new();
        let mut count = 0;
        for c in space.chunks(1000) {
            for v in space.iter_range(c) {
                seen.insert(v);
                count += 1;
            }
        }
        assert_eq!((count, seen.len()), (17010, 17010));
        assert_eq!(enumerate_candidates(10, 4, CandidateRange::new(5, 5)).unwrap().len(), 0);
    }

    #[test]
    fn colex_order() {
        let sets: Vec<Vec<usize>> = (0..binomial_u64(4, 2)).map(|r| unrank_colex(4, 2, r)).collect();
        assert_eq!(sets, [[0, 1], [0, 2], [1, 2], [0, 3], [1, 3], [2, 3]]);
    }
}
