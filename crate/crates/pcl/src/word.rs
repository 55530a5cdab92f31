use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Largest supported word length; a word always fits one `u32` bitmask.
pub const MAX_WORD_LEN: u32 = 32;

pub(crate) fn len_mask(len: u32) -> u32 {
    if len >= 32 {
        u32::MAX
    } else {
        (1u32 << len) - 1
    }
}

/// A fixed-length binary word stored as a bitmask.
///
/// Bit position `j` (0-indexed) holds coordinate `j + 1`; in the text
/// form, coordinate 1 is the leftmost character. All bit positions at or
/// above the length are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    len: u32,
    bits: u32,
}

impl Word {
    pub fn new(len: u32, bits: u32) -> Result<Self, Error> {
        if len == 0 || len > MAX_WORD_LEN {
            return Err(Error::InvalidLength(len));
        }
        if bits & !len_mask(len) != 0 {
            return Err(Error::BitsOutOfRange { length: len, bits });
        }
        Ok(Word { len, bits })
    }

    /// The all-zero word.
    pub fn zero(len: u32) -> Result<Self, Error> {
        Word::new(len, 0)
    }

    /// The unit word with a single one at `coord` (0-indexed bit position).
    pub fn unit(len: u32, coord: u32) -> Result<Self, Error> {
        if coord >= len {
            return Err(Error::CoordOutOfRange {
                coord,
                length: len,
            });
        }
        Word::new(len, 1 << coord)
    }

    pub fn all_ones(len: u32) -> Result<Self, Error> {
        if len == 0 || len > MAX_WORD_LEN {
            return Err(Error::InvalidLength(len));
        }
        Ok(Word {
            len,
            bits: len_mask(len),
        })
    }

    pub(crate) fn from_mask_unchecked(len: u32, bits: u32) -> Self {
        debug_assert!(len >= 1 && len <= MAX_WORD_LEN);
        debug_assert_eq!(bits & !len_mask(len), 0);
        Word { len, bits }
    }

    pub fn len(&self) -> u32 {
        self.len
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Number of nonzero coordinates.
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Weight modulo 2.
    pub fn parity(&self) -> u32 {
        self.weight() & 1
    }

    /// Hamming distance: the number of coordinates where the words differ.
    pub fn distance(&self, other: &Word) -> Result<u32, Error> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                left: self.len,
                right: other.len,
            });
        }
        Ok((self.bits ^ other.bits).count_ones())
    }

    /// Coordinate-wise sum modulo 2.
    pub fn xor(&self, other: &Word) -> Result<Word, Error> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                left: self.len,
                right: other.len,
            });
        }
        Ok(Word {
            len: self.len,
            bits: self.bits ^ other.bits,
        })
    }

    /// Bitwise complement within the word length.
    pub fn complement(&self) -> Word {
        Word {
            len: self.len,
            bits: self.bits ^ len_mask(self.len),
        }
    }

    pub fn get(&self, coord: u32) -> Result<bool, Error> {
        if coord >= self.len {
            return Err(Error::CoordOutOfRange {
                coord,
                length: self.len,
            });
        }
        Ok(self.bits >> coord & 1 == 1)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.len {
            f.write_str(if self.bits >> j & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let len = s.len() as u32;
        if s.is_empty() || len > MAX_WORD_LEN {
            return Err(Error::InvalidLength(len));
        }
        let mut bits = 0u32;
        for (j, ch) in s.chars().enumerate() {
            match ch {
                '1' => bits |= 1 << j,
                '0' => {}
                other => {
                    return Err(Error::Parse {
                        line: 0,
                        msg: format!("invalid character {other:?} in word"),
                    })
                }
            }
        }
        Ok(Word { len, bits })
    }
}

/// Hamming distance between two words of equal length.
pub fn hamming_distance(a: &Word, b: &Word) -> Result<u32, Error> {
    a.distance(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Independent oracle: distance by comparing text forms character by
    // character, never touching the bitmask path.
    fn char_distance(a: &Word, b: &Word) -> u32 {
        a.to_string()
            .chars()
            .zip(b.to_string().chars())
            .filter(|(x, y)| x != y)
            .count() as u32
    }

    #[test]
    fn distance_examples() {
        let a: Word = "000".parse().unwrap();
        let b: Word = "111".parse().unwrap();
        assert_eq!(a.distance(&b).unwrap(), 3);
        assert_eq!(a.distance(&a).unwrap(), 0);

        let c: Word = "1010".parse().unwrap();
        let d: Word = "0110".parse().unwrap();
        assert_eq!(c.distance(&d).unwrap(), 2);
        assert_eq!(c.distance(&d).unwrap(), char_distance(&c, &d));
    }

    #[test]
    fn distance_rejects_length_mismatch() {
        let a: Word = "000".parse().unwrap();
        let b: Word = "0000".parse().unwrap();
        assert!(matches!(
            a.distance(&b),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn weight_examples() {
        assert_eq!("0000".parse::<Word>().unwrap().weight(), 0);
        assert_eq!("1111111".parse::<Word>().unwrap().weight(), 7);
        assert_eq!("0001".parse::<Word>().unwrap().weight(), 1);
        // weight(a) = d(a, 0)
        let a: Word = "0110101".parse().unwrap();
        let z = Word::zero(7).unwrap();
        assert_eq!(a.weight(), a.distance(&z).unwrap());
    }

    #[test]
    fn coordinate_order_is_leftmost_first() {
        // e1: coordinate 1 set, so the leftmost character is '1'.
        let e1 = Word::unit(7, 0).unwrap();
        assert_eq!(e1.to_string(), "1000000");
        assert_eq!(e1.bits(), 1);
        let w: Word = "1100000".parse().unwrap();
        assert_eq!(w.bits(), 0b0000011);
    }

    #[test]
    fn complement_is_involution() {
        let w: Word = "0110101".parse().unwrap();
        assert_eq!(w.complement().complement(), w);
        assert_eq!("000".parse::<Word>().unwrap().complement().to_string(), "111");
    }

    #[test]
    fn rejects_invalid_input() {
        assert!(Word::new(0, 0).is_err());
        assert!(Word::new(33, 0).is_err());
        assert!(Word::new(3, 0b1000).is_err());
        assert!("01x".parse::<Word>().is_err());
    }

    #[test]
    fn full_length_words() {
        let w = Word::all_ones(32).unwrap();
        assert_eq!(w.weight(), 32);
        assert_eq!(w.complement().weight(), 0);
    }
}
