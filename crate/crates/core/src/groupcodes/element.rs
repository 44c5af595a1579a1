use crate::algebra::{Field, LinearCode, Matrix, Vector, F4};
use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, Ordering};

/// Precomputed index pattern of σ for one group and ordering:
/// entry `(i, j)` of σ(v) is the coefficient at the position of
/// `g_i⁻¹·g_j`.
#[derive(Clone, Debug)]
pub struct SigmaLayout {
    n: usize,
    index: Vec<u16>,
}

impl SigmaLayout {
    pub fn new(group: &FiniteGroup, ordering: &Ordering) -> Result<SigmaLayout> {
        let n = group.order();
        if ordering.len() != n {
            return Err(Error::LengthMismatch { expected: n, found: ordering.len() });
        }
        let o = ordering.elements();
        let pos = ordering.positions();
        let mut index = Vec::with_capacity(n * n);
        for i in 0..n {
            let inv = group.inv(o[i]);
            for j in 0..n {
                index.push(pos[group.mul(inv, o[j])] as u16);
            }
        }
        Ok(SigmaLayout { n, index })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Position (in `coeffs`) of the entry at `(i, j)`.
    #[inline]
    pub fn source(&self, i: usize, j: usize) -> usize {
        self.index[i * self.n + j] as usize
    }

    /// Row `i` of σ for the given coefficient vector.
    pub fn row(&self, coeffs: &Vector, i: usize) -> Vector {
        let mut r = Vector::zeros(self.n);
        for j in 0..self.n {
            r.set(j, coeffs.get(self.source(i, j)));
        }
        r
    }

    pub fn rows(&self, coeffs: &Vector) -> Vec<Vector> {
        (0..self.n).map(|i| self.row(coeffs, i)).collect()
    }
}

/// `v = Σ α_{g_i} g_i` with `coeffs[i] = α_{g_i}` for the i-th listed element.
#[derive(Clone, Debug)]
pub struct GroupRingElement {
    group: FiniteGroup,
    ordering: Ordering,
    field: Field,
    coeffs: Vector,
}

impl GroupRingElement {
    pub fn new(group: FiniteGroup, ordering: Ordering, field: Field, coeffs: Vector) -> Result<GroupRingElement> {
        if coeffs.len() != group.order() {
            return Err(Error::LengthMismatch { expected: group.order(), found: coeffs.len() });
        }
        if ordering.len() != group.order() {
            return Err(Error::LengthMismatch { expected: group.order(), found: ordering.len() });
        }
        for (i, c) in coeffs.symbols().into_iter().enumerate() {
            c.check_field(field, i)?;
        }
        Ok(GroupRingElement { group, ordering, field, coeffs })
    }

    /// The element with coefficient `coeff(h)` on each group element `h`,
    /// laid out along `ordering`.
    pub fn from_fn(
        group: FiniteGroup,
        ordering: Ordering,
        field: Field,
        coeff: impl Fn(usize) -> F4,
    ) -> Result<GroupRingElement> {
        let symbols: Vec<F4> = ordering.elements().iter().map(|&h| coeff(h)).collect();
        let coeffs = Vector::from_symbols(&symbols);
        GroupRingElement::new(group, ordering, field, coeffs)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn ordering(&self) -> &Ordering {
        &self.ordering
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &Vector {
        &self.coeffs
    }

    /// Coefficient on the group element `h`.
    pub fn coeff_of(&self, h: usize) -> F4 {
        self.coeffs.get(self.ordering.positions()[h])
    }

    pub fn layout(&self) -> SigmaLayout {
        SigmaLayout::new(&self.group, &self.ordering).expect("validated on construction")
    }
}

pub fn sigma_matrix(v: &GroupRingElement) -> Matrix {
    Matrix::new(v.field, v.coeffs.len(), v.layout().rows(&v.coeffs)).expect("rows match the group order")
}

/// Row space of σ(v).
pub fn group_code(v: &GroupRingElement) -> LinearCode {
    LinearCode::from_matrix(&sigma_matrix(v))
}
