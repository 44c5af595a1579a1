//! Trace codes and subfield subcodes of GF(4) codes.

use crate::algebra::{Field, LinearCode, Vector};
use crate::error::{Error, Result};

fn require_f4(c: &LinearCode) -> Result<()> {
    if c.field() != Field::F4 {
        return Err(Error::FieldMismatch { expected: Field::F4, found: c.field() });
    }
    Ok(())
}

/// Tr(C): the binary code spanned by Tr(gᵢ) and Tr(w·gᵢ).
pub fn trace_code(c: &LinearCode) -> Result<LinearCode> {
    require_f4(c)?;
    let rows = c.f2_basis().iter().map(Vector::trace).collect();
    LinearCode::new(Field::F2, c.len(), rows)
}

/// C ∩ GF(2)ⁿ, computed as the kernel of the trace map restricted to C.
pub fn subfield_subcode(c: &LinearCode) -> Result<LinearCode> {
    require_f4(c)?;
    LinearCode::new(Field::F2, c.len(), trace_kernel(&c.f2_basis()))
}

/// Basis of the words in the GF(2)-span of `basis` whose trace vanishes.
pub(crate) fn trace_kernel(basis: &[Vector]) -> Vec<Vector> {
    // echelon rows over the trace plane, each paired with its preimage
    let mut pivots: Vec<(u128, u128, Vector)> = Vec::new();
    let mut kernel = Vec::new();
    for b in basis {
        let mut t = b.hi();
        let mut word = *b;
        for (bit, pt, pw) in &pivots {
            if t & bit != 0 {
                t ^= pt;
                word.add_assign(pw);
            }
        }
        if t == 0 {
            debug_assert!(word.is_binary());
            kernel.push(word);
        } else {
            let bit = t & t.wrapping_neg();
            pivots.push((bit, t, word));
        }
    }
    kernel
}

/// Subcode of a binary code made of its even-weight words. The dimension
/// drops by one exactly when some generator has odd weight.
pub fn even_weight_subcode(c: &LinearCode) -> Result<LinearCode> {
    if c.field() != Field::F2 {
        return Err(Error::FieldMismatch { expected: Field::F2, found: c.field() });
    }
    let mut odd = None;
    let mut rows = Vec::with_capacity(c.dim());
    for g in c.generators() {
        if g.weight() % 2 == 0 {
            rows.push(*g);
        } else if let Some(o) = odd {
            rows.push(g.add(&o));
        } else {
            odd = Some(*g);
        }
    }
    LinearCode::new(Field::F2, c.len(), rows)
}
