use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An enumeration would visit more words than the configured budget.
    #[error("enumeration of {needed_log2} bits exceeds the cap of {cap} words")]
    CapExceeded { needed_log2: u32, cap: u64 },
    #[error("vector length {0} exceeds the supported maximum of 128")]
    LengthTooLarge(usize),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: crate::Field, found: crate::Field },
    #[error("operation requires a code of positive dimension")]
    ZeroDimension,
    #[error("inconsistent weight spectrum: {0}")]
    InconsistentSpectrum(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid symbol {symbol:?} at offset {offset}")]
    BadSymbol { symbol: char, offset: usize },

    #[error("unknown group: {0}")]
    UnknownGroup(String),
    #[error("catalog only covers even orders up to 24, got order {0}")]
    OddOrderUnsupported(usize),
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("element {0} is not an involution")]
    NotInvolution(usize),
    #[error("invalid coset representatives: {0}")]
    BadReps(String),
    #[error("the identity element cannot generate a quasi-cyclic ordering")]
    IdentityElement,

    #[error("inner groups must all have order {expected}, found order {found}")]
    InnerOrderMismatch { expected: usize, found: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("value out of range: {0}")]
    BadRange(String),
    #[error("too many words for an explicit audit: {count} > {limit}")]
    TooManyWords { count: usize, limit: usize },
    #[error("linear-shortcut audit requires the generating code")]
    MissingCode,
    #[error("i/o error on {path}: {msg}")]
    Io { path: String, msg: String },
}

impl Error {
    pub(crate) fn io(path: &std::path::Path, e: std::io::Error) -> Error {
        Error::Io { path: path.display().to_string(), msg: e.to_string() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
