//! Binary covering-code toolkit: perfect codes, extended perfect codes,
//! nearly perfect 1-covering codes (NP1CCs), their parity extensions
//! (ENP1CCs), and diamond completely regular codes.
//!
//! Words are bitmasks of length at most 32 and codes are canonical sorted
//! word sets, so every structural claim can be settled by exhaustive
//! enumeration at desk scale. Weight distributions are computed twice,
//! by independent routes:
//!
//! * closed-form tables in exact integer arithmetic ([`weightdist`]),
//! * brute-force enumeration ([`Code::weight_distribution`]).
//!
//! [`analysis`] certifies the structural properties (perfection, covering
//! radius, partner pairing, quotient matrices, 4-cycles) by full scans,
//! and [`verify`] runs the whole cross-checking matrix for a given
//! parameter `r`.

pub mod analysis;
mod binom;
mod code;
pub mod constructions;
mod error;
mod scan;
pub mod verify;
pub mod weightdist;
mod word;

pub use code::{Code, Parity, WeightDistribution};
pub use error::Error;
pub use word::{Word, MAX_WORD_LEN};

/// Default cap on the word length for full 2^n space scans.
///
/// A scan touches all `2^n` words of the space and computes distances
/// against every codeword, so the cap bounds the total work; operations
/// that need a scan refuse longer codes.
pub const DEFAULT_ENUM_CAP: u32 = 24;

pub type Result<T> = std::result::Result<T, Error>;
