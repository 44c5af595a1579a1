use std::fmt;

use crate::algebra::field::{Field, F4};
use crate::algebra::vector::{Vector, MAX_LEN};
use crate::error::{Error, Result};

/// A dense matrix over GF(2) or GF(4), stored as bit-sliced rows.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix {
    field: Field,
    cols: usize,
    rows: Vec<Vector>,
}

impl Matrix {
    pub fn new(field: Field, cols: usize, rows: Vec<Vector>) -> Result<Matrix> {
        if cols > MAX_LEN {
            return Err(Error::LengthTooLarge(cols));
        }
        for r in &rows {
            if r.len() != cols {
                return Err(Error::LengthMismatch { expected: cols, found: r.len() });
            }
            if !r.in_field(field) {
                return Err(Error::FieldMismatch { expected: field, found: Field::F4 });
            }
        }
        Ok(Matrix { field, cols, rows })
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, cols, rows: vec![Vector::zeros(cols); rows] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.rows[i].set(i, F4::One);
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vector> {
        self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> F4 {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, x: F4) {
        assert!(self.field == Field::F4 || x.in_f2());
        self.rows[r].set(c, x);
    }

    /// `[self | other]`.
    pub fn hconcat(&self, other: &Matrix) -> Result<Matrix> {
        if self.num_rows() != other.num_rows() {
            return Err(Error::ShapeMismatch(format!(
                "cannot concatenate {} rows with {} rows",
                self.num_rows(),
                other.num_rows()
            )));
        }
        let cols = self.cols + other.cols;
        if cols > MAX_LEN {
            return Err(Error::LengthTooLarge(cols));
        }
        let field = if self.field == Field::F4 || other.field == Field::F4 { Field::F4 } else { Field::F2 };
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| Vector::from_planes(cols, a.lo() | (b.lo() << self.cols), a.hi() | (b.hi() << self.cols)))
            .collect();
        Ok(Matrix { field, cols, rows })
    }

    /// Reduced row echelon form with leftmost pivots scaled to one; zero rows
    /// are moved to the bottom. Returns the reduced matrix and its rank.
    pub fn rref(&self) -> (Matrix, usize) {
        let mut rows = self.rows.clone();
        let rank = rref_in_place(&mut rows, self.cols);
        (Matrix { field: self.field, cols: self.cols, rows }, rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }
}

/// Reduces `rows` in place and returns the rank. Nonzero rows come first, in
/// pivot order.
pub(crate) fn rref_in_place(rows: &mut [Vector], cols: usize) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows.len() {
            break;
        }
        let bit = 1u128 << c;
        let Some(p) = (rank..rows.len()).find(|&r| rows[r].support() & bit != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let lead = rows[rank].get(c);
        let pivot = rows[rank].scale(lead.inv().expect("nonzero pivot"));
        rows[rank] = pivot;
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row.support() & bit != 0 {
                let f = row.get(c);
                row.add_assign(&pivot.scale(f));
            }
        }
        rank += 1;
    }
    rank
}

/// Incrementally maintained echelon basis used for independence tests and
/// membership queries.
#[derive(Clone, Debug, Default)]
pub(crate) struct EchelonBasis {
    rows: Vec<(usize, Vector)>,
}

impl EchelonBasis {
    pub fn new() -> EchelonBasis {
        EchelonBasis { rows: Vec::new() }
    }

    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut v = *v;
        for (p, row) in &self.rows {
            let c = v.get(*p);
            if !c.is_zero() {
                v.add_assign(&row.scale(c));
            }
        }
        v
    }

    /// Inserts `v` if independent of the current rows; returns whether it was.
    pub fn insert(&mut self, v: &Vector) -> bool {
        let r = self.reduce(v);
        if r.is_zero() {
            return false;
        }
        let p = r.support().trailing_zeros() as usize;
        let r = r.scale(r.get(p).inv().expect("nonzero"));
        self.rows.push((p, r));
        true
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// Reduced row echelon form and rank.
pub fn rref_rank(m: &Matrix) -> (Matrix, usize) {
    m.rref()
}
