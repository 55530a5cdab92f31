use thiserror::Error;

/// Errors for code construction, file parsing, and scan preconditions.
///
/// Structural verification failures are not errors: the `analysis`
/// checkers return reports with witnesses instead. An `Error` means the
/// input violated a precondition (mismatched lengths, an unverified code
/// fed to a builder, a scan above the enumeration cap, ...).
#[derive(Debug, Error)]
pub enum Error {
    #[error("word length {0} out of range 1..=32")]
    InvalidLength(u32),

    #[error("bitmask {bits:#x} has bits at or above length {length}")]
    BitsOutOfRange { length: u32, bits: u32 },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: u32, right: u32 },

    #[error("code must contain at least one word")]
    EmptyCode,

    #[error("minimum distance is undefined for a single-word code")]
    SingletonCode,

    #[error("duplicate codeword {word}")]
    DuplicateWord { word: String },

    #[error("coordinate {coord} out of range for length {length}")]
    CoordOutOfRange { coord: u32, length: u32 },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("length {length} exceeds the enumeration cap {cap}")]
    CapExceeded { length: u32, cap: u32 },

    #[error("puncturing coordinate {coord} collapses {a} and {b}")]
    PunctureCollapse { coord: u32, a: String, b: String },

    #[error("word {word} is not in the code")]
    WordNotInCode { word: String },

    #[error("partner structure violated at {word}: {count} candidates within distance 2 ({candidates:?})")]
    PartnerViolation {
        word: String,
        count: usize,
        candidates: Vec<String>,
    },

    #[error("input is not a perfect code: {0}")]
    NotPerfect(String),

    #[error("input is not an NP1CC: {0}")]
    NotNp1cc(String),

    #[error("input is not an ENP1CC: {0}")]
    NotEnp1cc(String),

    #[error("input is not a diamond code: {0}")]
    NotDiamond(String),

    #[error("cycle structure violated: {0}")]
    CycleViolation(String),

    #[error("parameter r={r} out of supported range {min}..={max}")]
    ROutOfRange { r: u32, min: u32, max: u32 },

    #[error("closed form is not an integer at index {index}: {num}/{den}")]
    NonIntegral { index: u32, num: i128, den: i128 },

    #[error("closed form is negative at index {index}: {value}")]
    NegativeEntry { index: u32, value: i128 },

    #[error("closed-form tables are internally inconsistent: {0}")]
    ClosedFormInconsistency(String),

    #[error("{0}")]
    InvalidInput(String),
}
