use crate::algebra::{Field, LinearCode, Matrix, Vector, MAX_LEN};
use crate::error::{Error, Result};
use crate::groupcodes::element::SigmaLayout;
use crate::groups::{FiniteGroup, Ordering};

/// An inner group with its ordering, carrying one block of coefficients.
#[derive(Clone, Debug)]
pub struct InnerBlock {
    pub group: FiniteGroup,
    pub ordering: Ordering,
    pub coeffs: Vector,
}

/// `v = σ(v_{g_1}) g_1 + ⋯ + σ(v_{g_n}) g_n`, with the block for each outer
/// group element stored at that element's index (not its position).
#[derive(Clone, Debug)]
pub struct CompositeElement {
    outer: FiniteGroup,
    ordering: Ordering,
    field: Field,
    blocks: Vec<InnerBlock>,
    k: usize,
}

impl CompositeElement {
    pub fn new(
        outer: FiniteGroup,
        ordering: Ordering,
        field: Field,
        blocks: Vec<InnerBlock>,
    ) -> Result<CompositeElement> {
        let n = outer.order();
        if ordering.len() != n || blocks.len() != n {
            return Err(Error::LengthMismatch { expected: n, found: blocks.len().min(ordering.len()) });
        }
        let k = blocks.first().map_or(0, |b| b.group.order());
        for b in &blocks {
            if b.group.order() != k {
                return Err(Error::InnerOrderMismatch { expected: k, found: b.group.order() });
            }
            if b.ordering.len() != k || b.coeffs.len() != k {
                return Err(Error::LengthMismatch { expected: k, found: b.coeffs.len() });
            }
            for (i, c) in b.coeffs.symbols().into_iter().enumerate() {
                c.check_field(field, i)?;
            }
        }
        if n * k > MAX_LEN {
            return Err(Error::LengthTooLarge(n * k));
        }
        Ok(CompositeElement { outer, ordering, field, blocks, k })
    }

    pub fn outer(&self) -> &FiniteGroup {
        &self.outer
    }

    pub fn ordering(&self) -> &Ordering {
        &self.ordering
    }

    pub fn blocks(&self) -> &[InnerBlock] {
        &self.blocks
    }

    /// Order of the inner groups.
    pub fn inner_order(&self) -> usize {
        self.k
    }

    /// True when the outer and every inner ordering are reversible.
    pub fn has_reversible_orderings(&self) -> bool {
        self.ordering.is_reversible() && self.blocks.iter().all(|b| b.ordering.is_reversible())
    }
}

/// The `kn × kn` matrix whose block `(i, j)` is σ of the block attached to
/// `g_i⁻¹·g_j`.
pub fn composite_sigma_matrix(cv: &CompositeElement) -> Result<Matrix> {
    let n = cv.outer.order();
    let k = cv.k;
    let sigmas: Vec<Vec<Vector>> = cv
        .blocks
        .iter()
        .map(|b| Ok(SigmaLayout::new(&b.group, &b.ordering)?.rows(&b.coeffs)))
        .collect::<Result<_>>()?;
    let o = cv.ordering.elements();
    let mut rows = vec![Vector::zeros(n * k); n * k];
    for i in 0..n {
        let inv = cv.outer.inv(o[i]);
        for j in 0..n {
            let block = &sigmas[cv.outer.mul(inv, o[j])];
            for r in 0..k {
                for c in 0..k {
                    rows[i * k + r].set(j * k + c, block[r].get(c));
                }
            }
        }
    }
    Matrix::new(cv.field, n * k, rows)
}

pub fn composite_group_code(cv: &CompositeElement) -> Result<LinearCode> {
    Ok(LinearCode::from_matrix(&composite_sigma_matrix(cv)?))
}
