//! Listing the GC-balanced codewords of a GF(4) code.
//!
//! The trace map C → Tr(C) is onto with kernel C ∩ GF(2)ⁿ. Picking basis
//! vectors t₁…t_{k₁} from {g₁…g_k, w·g₁…w·g_k} whose traces form a basis of
//! Tr(C) gives a section of that map, so the words of GC-weight n/2 are the
//! section's words with trace weight n/2, each shifted by every word of the
//! subfield subcode.

use crate::algebra::enumerate::{check_cap, par_fold};
use crate::algebra::matrix::EchelonBasis;
use crate::algebra::{Field, LinearCode, Vector};
use crate::enumerators::subfield_subcode;
use crate::error::{Error, Result};

/// Basis vectors chosen by scanning g₁…g_k and then w·g₁…w·g_k, keeping each
/// one whose trace is independent of the traces kept so far.
pub fn trace_section_basis(c: &LinearCode) -> Vec<Vector> {
    let n = c.len();
    let mut traces = EchelonBasis::new();
    c.f2_basis().into_iter().filter(|t| traces.insert(&Vector::from_bits(n, t.hi()))).collect()
}

/// Every codeword of GC-weight n/2, sorted.
pub fn extract_gc_half(c: &LinearCode, cap: u64) -> Result<Vec<Vector>> {
    if c.field() != Field::F4 {
        return Err(Error::FieldMismatch { expected: Field::F4, found: c.field() });
    }
    let n = c.len();
    if !n.is_multiple_of(2) {
        return Err(Error::BadRange(format!("GC-balanced words need even length, got {n}")));
    }
    let half = (n / 2) as u32;
    let section = trace_section_basis(c);
    check_cap(section.len(), cap)?;
    let reps = par_fold(
        n,
        &section,
        Vec::new,
        |acc: &mut Vec<Vector>, v| {
            if v.gc_weight() == half {
                acc.push(*v);
            }
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    );
    let sub = subfield_subcode(c)?;
    let total = (reps.len() as u128) << sub.dim();
    if total > cap as u128 {
        return Err(Error::CapExceeded { needed_log2: 128 - total.leading_zeros(), cap });
    }
    let shifts: Vec<Vector> = sub.codewords(cap)?.collect();
    let mut out = Vec::with_capacity(total as usize);
    for r in &reps {
        out.extend(shifts.iter().map(|s| r.add(s)));
    }
    out.sort_unstable();
    Ok(out)
}
