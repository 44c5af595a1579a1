//! Reversible group codes over GF(4) for DNA storage.
//!
//! Codes are built from group-ring elements of even-order groups. Under the
//! orderings provided here every such code is reversible. GC-balanced
//! codewords are counted through trace codes and Krawtchouk polynomials
//! instead of by enumeration.
//!
//! Modules, bottom up:
//!
//! - [`algebra`]: linear codes over GF(2) and GF(4).
//! - [`groups`]: the catalog of groups of even order up to 24 and their
//!   element orderings.
//! - [`groupcodes`]: group codes σ(v) and composite codes σ*ₖ(v).
//! - [`enumerators`]: weight enumerators through trace codes.
//! - [`dna`]: the GF(4) ↔ {A,C,G,T} map and DNA constraint checks.
//! - [`search`]: parallel enumeration of generator vectors.

pub mod algebra;
pub mod dna;
pub mod enumerators;
mod error;
pub mod groupcodes;
pub mod groups;
pub mod search;

pub use algebra::{Field, LinearCode, Matrix, Vector, F4};
pub use error::{Error, Result};
