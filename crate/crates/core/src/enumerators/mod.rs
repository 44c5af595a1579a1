//! Trace codes, subfield subcodes, weight enumerators, MacWilliams and
//! Krawtchouk machinery, and the fast count of GC-balanced codewords.

pub mod gc;
pub mod krawtchouk;
pub mod spectrum;
pub mod trace;

pub use gc::{count_gc_half_fast, gc_weight_enumerator};
pub use krawtchouk::{krawtchouk, KrawtchoukTable};
pub use spectrum::{
    complete_weight_enumerator, gc_spectrum_brute_force, hamming_spectrum, hamming_spectrum_enumerated,
    hamming_spectrum_via_dual, macwilliams, CompleteWE, GCSpectrum, WeightSpectrum,
};
pub use trace::{even_weight_subcode, subfield_subcode, trace_code};
