use std::fmt;

use num_bigint::BigUint;

use crate::algebra::enumerate::{check_cap, Codewords};
use crate::algebra::field::{Field, F4};
use crate::algebra::matrix::{rref_in_place, Matrix};
use crate::algebra::vector::{Vector, MAX_LEN};
use crate::enumerators::spectrum;
use crate::error::{Error, Result};

/// A linear code, stored as its reduced row echelon generator matrix.
///
/// Because the generator matrix is canonical, two codes are equal exactly
/// when their `LinearCode` values compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearCode {
    n: usize,
    field: Field,
    generators: Vec<Vector>,
    pivots: Vec<usize>,
}

impl LinearCode {
    /// Row space of `rows` over `field`. Rows may be dependent.
    pub fn new(field: Field, n: usize, rows: Vec<Vector>) -> Result<LinearCode> {
        let m = Matrix::new(field, n, rows)?;
        Ok(LinearCode::from_matrix(&m))
    }

    pub fn from_matrix(m: &Matrix) -> LinearCode {
        let mut rows = m.rows().to_vec();
        let rank = rref_in_place(&mut rows, m.num_cols());
        rows.truncate(rank);
        let pivots = rows.iter().map(|r| r.support().trailing_zeros() as usize).collect();
        LinearCode { n: m.num_cols(), field: m.field(), generators: rows, pivots }
    }

    pub fn zero(field: Field, n: usize) -> LinearCode {
        assert!(n <= MAX_LEN);
        LinearCode { n, field, generators: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: Field, n: usize) -> LinearCode {
        LinearCode::from_matrix(&Matrix::identity(field, n))
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn generators(&self) -> &[Vector] {
        &self.generators
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn generator_matrix(&self) -> Matrix {
        Matrix::new(self.field, self.n, self.generators.clone()).expect("valid generators")
    }

    /// Number of codewords, qᵏ.
    pub fn size(&self) -> BigUint {
        BigUint::from(self.field.size()).pow(self.dim() as u32)
    }

    /// Dimension as a GF(2) space.
    pub fn f2_dim(&self) -> usize {
        self.dim() * self.field.degree() as usize
    }

    /// GF(2) basis: the generators, followed by w times each generator for
    /// GF(4) codes.
    pub fn f2_basis(&self) -> Vec<Vector> {
        let mut basis = self.generators.clone();
        if self.field == Field::F4 {
            basis.extend(self.generators.iter().map(|g| g.scale(F4::W)));
        }
        basis
    }

    /// Reduces `v` modulo the code; zero iff `v` is a codeword.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut v = *v;
        for (g, &p) in self.generators.iter().zip(&self.pivots) {
            let c = v.get(p);
            if !c.is_zero() {
                v.add_assign(&g.scale(c));
            }
        }
        v
    }

    pub fn contains(&self, v: &Vector) -> bool {
        v.len() == self.n && v.in_field(self.field) && self.reduce(v).is_zero()
    }

    pub fn contains_all_ones(&self) -> bool {
        self.contains(&Vector::ones(self.n))
    }

    /// `true` when every codeword of `self` lies in `other`.
    pub fn is_subcode_of(&self, other: &LinearCode) -> bool {
        self.n == other.n && self.generators.iter().all(|g| other.contains(g))
    }

    /// Streams every codeword exactly once, in Gray-code order over the
    /// GF(2) basis.
    pub fn codewords(&self, cap: u64) -> Result<Codewords> {
        check_cap(self.f2_dim(), cap)?;
        Ok(Codewords::new(self.n, self.f2_basis()))
    }

    /// Euclidean dual.
    pub fn dual(&self) -> LinearCode {
        let mut is_pivot = vec![false; self.n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut rows = Vec::with_capacity(self.n - self.dim());
        for j in (0..self.n).filter(|&j| !is_pivot[j]) {
            let mut h = Vector::zeros(self.n);
            h.set(j, F4::One);
            for (g, &p) in self.generators.iter().zip(&self.pivots) {
                // -x = x in characteristic 2
                h.set(p, g.get(j));
            }
            rows.push(h);
        }
        let m = Matrix::new(self.field, self.n, rows).expect("dual rows are valid");
        LinearCode::from_matrix(&m)
    }

    /// Minimum Hamming weight of a nonzero codeword.
    ///
    /// Enumerates whichever of the code and its dual is smaller; the dual
    /// route recovers the full spectrum through the MacWilliams transform.
    pub fn min_distance(&self, cap: u64) -> Result<u32> {
        if self.dim() == 0 {
            return Err(Error::ZeroDimension);
        }
        if self.enumerate_directly(cap) {
            let mut best = u32::MAX;
            for v in self.codewords(cap)?.skip(1) {
                best = best.min(v.weight());
                if best == 1 {
                    break;
                }
            }
            return Ok(best);
        }
        let spec = spectrum::hamming_spectrum_via_dual(self, cap)?;
        spec.min_nonzero_weight().ok_or(Error::ZeroDimension)
    }

    /// Whether some nonzero codeword has weight below `d`; stops at the first
    /// witness when enumerating directly.
    pub fn has_weight_below(&self, d: u32, cap: u64) -> Result<bool> {
        if self.dim() == 0 || d <= 1 {
            return Ok(false);
        }
        if self.enumerate_directly(cap) {
            return Ok(self.codewords(cap)?.skip(1).any(|v| v.weight() < d));
        }
        Ok(self.min_distance(cap)? < d)
    }

    fn enumerate_directly(&self, cap: u64) -> bool {
        let own = self.f2_dim();
        let dual = (self.n - self.dim()) * self.field.degree() as usize;
        let own_ok = check_cap(own, cap).is_ok();
        let dual_ok = check_cap(dual, cap).is_ok();
        own_ok && (own <= dual || !dual_ok)
    }

    /// Generator rows as symbol strings, the canonical form used for
    /// deduplication and ordering.
    pub fn canonical_form(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.to_string()).collect()
    }
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearCode[{}, {}] over {} {:?}", self.n, self.dim(), self.field, self.canonical_form())
    }
}

/// Free function form of [`LinearCode::dual`].
pub fn dual_code(c: &LinearCode) -> LinearCode {
    c.dual()
}

/// Free function form of [`LinearCode::min_distance`].
pub fn min_distance(c: &LinearCode, enumeration_cap: u64) -> Result<u32> {
    c.min_distance(enumeration_cap)
}

/// Free function form of [`LinearCode::codewords`].
pub fn enumerate_codewords(c: &LinearCode, cap: u64) -> Result<Codewords> {
    c.codewords(cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::enumerate::DEFAULT_CAP;
    use std::collections::BTreeSet;

    fn code(field: Field, rows: &[&str]) -> LinearCode {
        let rows: Vec<Vector> = rows.iter().map(|r| Vector::parse(r).unwrap()).collect();
        LinearCode::new(field, rows[0].len(), rows).unwrap()
    }

    #[test]
    fn dual_of_repetition_is_even_weight() {
        let rep = code(Field::F2, &["111"]);
        let d = rep.dual();
        assert_eq!(d.dim(), 2);
        assert_eq!(d, code(Field::F2, &["110", "011"]));
    }

    #[test]
    fn dual_of_full_space_is_zero() {
        let d = LinearCode::full(Field::F4, 3).dual();
        assert_eq!(d.dim(), 0);
        assert_eq!(d.len(), 3);
    }

    #[test]
    fn self_dual_pair() {
        let c = code(Field::F2, &["11"]);
        assert_eq!(c.dual(), c);
    }

    #[test]
    fn cyclic_6_4_2() {
        let c = code(Field::F2, &["100011", "010010", "001001", "000111"]);
        assert_eq!(c.dim(), 4);
        assert_eq!(c.min_distance(DEFAULT_CAP).unwrap(), 2);
        // dual route gives the same answer
        assert_eq!(c.min_distance(4).unwrap(), 2);
    }

    #[test]
    fn full_space_distance_one() {
        assert_eq!(LinearCode::full(Field::F4, 5).min_distance(DEFAULT_CAP).unwrap(), 1);
        assert_eq!(LinearCode::zero(Field::F4, 5).min_distance(DEFAULT_CAP), Err(Error::ZeroDimension));
    }

    #[test]
    fn enumeration_counts() {
        let zero = LinearCode::zero(Field::F2, 4);
        let words: Vec<_> = zero.codewords(DEFAULT_CAP).unwrap().collect();
        assert_eq!(words, vec![Vector::zeros(4)]);

        let rep = code(Field::F2, &["111"]);
        let words: BTreeSet<String> = rep.codewords(DEFAULT_CAP).unwrap().map(|v| v.to_string()).collect();
        assert_eq!(words, ["000", "111"].iter().map(|s| s.to_string()).collect());

        let full = LinearCode::full(Field::F4, 2);
        let words: BTreeSet<Vector> = full.codewords(DEFAULT_CAP).unwrap().collect();
        assert_eq!(words.len(), 16);
        assert!(matches!(full.codewords(8), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn membership() {
        let c = code(Field::F4, &["1w0", "01W"]);
        assert!(c.contains(&Vector::parse("1WW").unwrap().scale(F4::W)));
        assert!(!c.contains(&Vector::parse("100").unwrap()));
        let b = code(Field::F2, &["11"]);
        assert!(!b.contains(&Vector::parse("ww").unwrap()));
    }
}
