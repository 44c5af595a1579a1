//! Linear algebra and linear codes over GF(2) and GF(4).

pub mod code;
pub mod enumerate;
pub mod field;
pub mod io;
pub mod matrix;
pub mod vector;

pub use code::{dual_code, enumerate_codewords, min_distance, LinearCode};
pub use enumerate::{Codewords, DEFAULT_CAP};
pub use field::{f4_trace, Field, F4};
pub use matrix::{rref_rank, Matrix};
pub use vector::{Vector, MAX_LEN};
