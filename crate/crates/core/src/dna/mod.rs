//! DNA words over {A, C, G, T} and the constraints DNA codes are audited
//! against.
//!
//! GF(4) symbols map to bases by 0 ↦ A, 1 ↦ T, w ↦ C, w² ↦ G, under which
//! the Watson–Crick complement is addition of the all-one vector and the
//! GC-weight of a word is the Hamming weight of its trace.

mod constraints;
mod extract;
mod io;
mod seq;

pub use constraints::{
    constraint_audit, find_tandem_repeat, is_conflict_free, is_ss_free, AuditMode, ConstraintReport, TandemRepeat,
    MAX_EXPLICIT_WORDS,
};
pub use extract::{extract_gc_half, trace_section_basis};
pub use io::{read_words, write_fasta, write_words, NamedWord};
pub use seq::{decode_dna, encode_dna, rc_transforms, DnaString, RcTransforms};
