//! GC-weight statistics through the trace code.
//!
//! For c ∈ C the GC-weight of c equals the Hamming weight of Tr(c), and the
//! trace map C → Tr(C) is GF(2)-linear and onto, so every trace word has
//! exactly |C|/|Tr(C)| preimages. The GC spectrum of C is therefore the
//! Hamming spectrum of Tr(C) scaled by that factor.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;

use crate::algebra::{Field, LinearCode};
use crate::enumerators::krawtchouk;
use crate::enumerators::spectrum::{hamming_spectrum, hamming_spectrum_enumerated, GCSpectrum};
use crate::enumerators::trace::{even_weight_subcode, trace_code};
use crate::error::{Error, Result};

/// GC-weight spectrum: `N_i = (|C|/|Tr(C)|) · #{t ∈ Tr(C) : wt(t) = i}`.
///
/// The trace-code spectrum is taken from whichever of Tr(C) and Tr(C)⊥ is
/// smaller.
pub fn gc_weight_enumerator(c: &LinearCode, cap: u64) -> Result<GCSpectrum> {
    let t = trace_code(c)?;
    let spec = hamming_spectrum(&t, cap)?;
    let factor = BigUint::from(1u32) << (c.f2_dim() - t.dim());
    Ok(spec.scaled(&factor))
}

/// Number of codewords with GC-weight n/2, from the even-weight subcode E of
/// Tr(C)⊥:
///
/// `N_{n/2} = (|C| / 2ⁿ) Σ_i A^E_{2i} P_{n/2}(2i; n)`.
pub fn count_gc_half_fast(c: &LinearCode, cap: u64) -> Result<BigUint> {
    if c.field() != Field::F4 {
        return Err(Error::FieldMismatch { expected: Field::F4, found: c.field() });
    }
    let n = c.len();
    if !n.is_multiple_of(2) {
        return Err(Error::BadRange(format!("GC-balanced words need even length, got {n}")));
    }
    let t = trace_code(c)?;
    let even = even_weight_subcode(&t.dual())?;
    let spec = hamming_spectrum_enumerated(&even, cap)?;
    let table = krawtchouk::table(n as u32, 2);
    let half = (n / 2) as u32;
    let sum: BigInt = spec
        .counts()
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(i, a)| BigInt::from(a.clone()) * table.get(half, i as u32))
        .sum();
    let numerator = BigInt::from(c.size()) * sum;
    let (q, r) = numerator.div_rem(&(BigInt::from(1u32) << n));
    if !r.is_zero() {
        return Err(Error::InconsistentSpectrum("GC-balanced count is not an integer".into()));
    }
    q.to_biguint().ok_or_else(|| Error::InconsistentSpectrum("GC-balanced count is negative".into()))
}
