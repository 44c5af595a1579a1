use serde::{Deserialize, Serialize};

use crate::algebra::{LinearCode, Vector};
use crate::error::{Error, Result};

/// Checks `reverse(r) ∈ C` for each generator row, which suffices because
/// reversal is linear.
pub fn is_reversible(c: &LinearCode) -> bool {
    c.generators().iter().all(|g| c.contains(&g.reverse()))
}

/// Checks every codeword; used to cross-validate [`is_reversible`].
pub fn is_reversible_exhaustive(c: &LinearCode, cap: u64) -> Result<bool> {
    let mut words = c.codewords(cap)?;
    Ok(words.all(|w| c.contains(&w.reverse())))
}

/// Quasi-cyclic layout: after moving coordinate `i` to `perm[i]`, the word
/// splits into `l` consecutive blocks of length `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QCProfile {
    pub m: usize,
    pub l: usize,
    pub perm: Vec<usize>,
}

impl QCProfile {
    /// Profile with the identity column permutation.
    pub fn contiguous(m: usize, l: usize) -> QCProfile {
        QCProfile { m, l, perm: (0..m * l).collect() }
    }

    fn validate(&self, n: usize) -> Result<()> {
        if self.m == 0 || self.m * self.l != n {
            return Err(Error::ShapeMismatch(format!("m = {}, l = {} does not tile length {n}", self.m, self.l)));
        }
        if self.perm.len() != n {
            return Err(Error::ShapeMismatch(format!("permutation has length {}, code has {n}", self.perm.len())));
        }
        let mut seen = vec![false; n];
        for &p in &self.perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::ShapeMismatch("column map is not a permutation".into()));
            }
        }
        Ok(())
    }

    /// Cyclic shift by one inside every block.
    pub fn shift(&self, v: &Vector) -> Vector {
        let mut out = Vector::zeros(v.len());
        for b in 0..self.l {
            for p in 0..self.m {
                out.set(b * self.m + (p + 1) % self.m, v.get(b * self.m + p));
            }
        }
        out
    }
}

/// True when the column-permuted code is closed under the simultaneous block
/// shift. Generator rows suffice since the shift is linear.
pub fn qc_check(c: &LinearCode, profile: &QCProfile) -> Result<bool> {
    profile.validate(c.len())?;
    let rows: Vec<Vector> = c.generators().iter().map(|g| g.permute(&profile.perm)).collect();
    let permuted = LinearCode::new(c.field(), c.len(), rows)?;
    Ok(permuted.generators().iter().all(|g| permuted.contains(&profile.shift(g))))
}
