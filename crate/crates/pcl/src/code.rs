use std::fmt;

use crate::error::Error;
use crate::scan;
use crate::word::{len_mask, Word};

/// Parity selector for extension, splitting, and recurrences.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub(crate) fn matches(self, weight: u32) -> bool {
        match self {
            Parity::Even => weight % 2 == 0,
            Parity::Odd => weight % 2 == 1,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// A nonempty set of distinct equal-length binary words.
///
/// The word list is kept sorted by bitmask, so two codes are equal as
/// sets exactly when they are structurally equal.
#[derive(Clone, PartialEq, Eq)]
pub struct Code {
    len: u32,
    masks: Vec<u32>,
}

impl Code {
    /// Builds a code from words, which must be distinct and of one length.
    pub fn from_words<I: IntoIterator<Item = Word>>(words: I) -> Result<Self, Error> {
        let mut iter = words.into_iter();
        let first = iter.next().ok_or(Error::EmptyCode)?;
        let len = first.len();
        let mut masks = vec![first.bits()];
        for w in iter {
            if w.len() != len {
                return Err(Error::LengthMismatch {
                    left: len,
                    right: w.len(),
                });
            }
            masks.push(w.bits());
        }
        Self::from_masks(len, masks)
    }

    /// Builds a code from raw bitmasks of the given length.
    pub fn from_masks(len: u32, mut masks: Vec<u32>) -> Result<Self, Error> {
        if len == 0 || len > crate::MAX_WORD_LEN {
            return Err(Error::InvalidLength(len));
        }
        if masks.is_empty() {
            return Err(Error::EmptyCode);
        }
        let mask = len_mask(len);
        if let Some(&bad) = masks.iter().find(|&&m| m & !mask != 0) {
            return Err(Error::BitsOutOfRange { length: len, bits: bad });
        }
        masks.sort_unstable();
        if let Some(w) = masks.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateWord {
                word: Word::from_mask_unchecked(len, w[0]).to_string(),
            });
        }
        Ok(Code { len, masks })
    }

    /// Internal constructor for mask lists already sorted and distinct.
    pub(crate) fn from_sorted_masks_unchecked(len: u32, masks: Vec<u32>) -> Self {
        debug_assert!(!masks.is_empty());
        debug_assert!(masks.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(masks.iter().all(|&m| m & !len_mask(len) == 0));
        Code { len, masks }
    }

    pub fn len(&self) -> u32 {
        self.len
    }

    /// Number of codewords.
    pub fn size(&self) -> usize {
        self.masks.len()
    }

    pub fn masks(&self) -> &[u32] {
        &self.masks
    }

    pub fn words(&self) -> impl Iterator<Item = Word> + '_ {
        let len = self.len;
        self.masks
            .iter()
            .map(move |&m| Word::from_mask_unchecked(len, m))
    }

    pub fn contains(&self, w: &Word) -> bool {
        w.len() == self.len && self.contains_mask(w.bits())
    }

    pub(crate) fn contains_mask(&self, m: u32) -> bool {
        self.masks.binary_search(&m).is_ok()
    }

    /// Membership bitset over the whole space; one bit per word.
    pub(crate) fn membership(&self) -> Vec<u64> {
        let mut bits = vec![0u64; 1usize << self.len.saturating_sub(6)];
        for &m in &self.masks {
            bits[(m >> 6) as usize] |= 1u64 << (m & 63);
        }
        bits
    }

    /// Distance of a word from the code: the minimum distance to any
    /// codeword; 0 exactly when the word is a codeword.
    pub fn distance(&self, x: &Word) -> Result<u32, Error> {
        if x.len() != self.len {
            return Err(Error::LengthMismatch {
                left: self.len,
                right: x.len(),
            });
        }
        let xb = x.bits();
        let mut best = u32::MAX;
        for &m in &self.masks {
            best = best.min((m ^ xb).count_ones());
            if best == 0 {
                break;
            }
        }
        Ok(best)
    }

    /// Smallest distance between two distinct codewords.
    pub fn min_distance(&self) -> Result<u32, Error> {
        if self.size() < 2 {
            return Err(Error::SingletonCode);
        }
        let mut best = u32::MAX;
        for (i, &a) in self.masks.iter().enumerate() {
            for &b in &self.masks[i + 1..] {
                best = best.min((a ^ b).count_ones());
                if best == 1 {
                    return Ok(1);
                }
            }
        }
        Ok(best)
    }

    /// Covering radius: the distance of the most distant word of the
    /// space, by a full scan of all `2^len` words against every codeword.
    pub fn covering_radius(&self, cap: u32) -> Result<u32, Error> {
        if self.len > cap {
            return Err(Error::CapExceeded {
                length: self.len,
                cap,
            });
        }
        let total = 1u64 << self.len;
        let masks = &self.masks;
        let chunk_max = scan::par_scan(total, |range| {
            let mut worst = 0u32;
            for x in range {
                let xb = x as u32;
                let mut best = u32::MAX;
                for &m in masks {
                    best = best.min((m ^ xb).count_ones());
                    if best == 0 {
                        break;
                    }
                }
                worst = worst.max(best);
            }
            worst
        });
        Ok(chunk_max.into_iter().max().unwrap_or(0))
    }

    /// The translate `x + C`.
    pub fn translate(&self, x: &Word) -> Result<Code, Error> {
        if x.len() != self.len {
            return Err(Error::LengthMismatch {
                left: self.len,
                right: x.len(),
            });
        }
        let xb = x.bits();
        let mut masks: Vec<u32> = self.masks.iter().map(|&m| m ^ xb).collect();
        masks.sort_unstable();
        Ok(Code {
            len: self.len,
            masks,
        })
    }

    /// Appends a parity coordinate so that every word gets the requested
    /// weight parity. The new coordinate is the highest one.
    pub fn extend(&self, parity: Parity) -> Result<Code, Error> {
        if self.len >= crate::MAX_WORD_LEN {
            return Err(Error::InvalidLength(self.len + 1));
        }
        let mut masks: Vec<u32> = self
            .masks
            .iter()
            .map(|&m| {
                let p = m.count_ones() & 1;
                let bit = match parity {
                    Parity::Even => p,
                    Parity::Odd => p ^ 1,
                };
                m | (bit << self.len)
            })
            .collect();
        masks.sort_unstable();
        Ok(Code {
            len: self.len + 1,
            masks,
        })
    }

    /// Deletes coordinate `coord` (0-indexed) from every codeword.
    ///
    /// Reports a collapse if two codewords become equal, which signals
    /// the input was not an extension in that coordinate.
    pub fn puncture(&self, coord: u32) -> Result<Code, Error> {
        if coord >= self.len {
            return Err(Error::CoordOutOfRange {
                coord,
                length: self.len,
            });
        }
        if self.len == 1 {
            return Err(Error::InvalidLength(0));
        }
        let low = len_mask(coord);
        let mut masks: Vec<u32> = self
            .masks
            .iter()
            .map(|&m| (m & low) | ((m >> (coord + 1)) << coord))
            .collect();
        masks.sort_unstable();
        if let Some(w) = masks.windows(2).find(|w| w[0] == w[1]) {
            let collapsed = w[0];
            let pair: Vec<u32> = self
                .masks
                .iter()
                .copied()
                .filter(|&m| (m & low) | ((m >> (coord + 1)) << coord) == collapsed)
                .take(2)
                .collect();
            return Err(Error::PunctureCollapse {
                coord,
                a: Word::from_mask_unchecked(self.len, pair[0]).to_string(),
                b: Word::from_mask_unchecked(self.len, pair[1]).to_string(),
            });
        }
        Ok(Code {
            len: self.len - 1,
            masks,
        })
    }

    /// Replaces every codeword by its bitwise complement.
    pub fn complement_words(&self) -> Code {
        let mask = len_mask(self.len);
        let mut masks: Vec<u32> = self.masks.iter().map(|&m| m ^ mask).collect();
        masks.sort_unstable();
        Code {
            len: self.len,
            masks,
        }
    }

    /// Counts codewords by weight.
    pub fn weight_distribution(&self) -> WeightDistribution {
        let mut counts = vec![0u64; self.len as usize + 1];
        for &m in &self.masks {
            counts[m.count_ones() as usize] += 1;
        }
        WeightDistribution { counts }
    }

    /// Parses the shared code file format: one codeword per line as a
    /// 0/1 string with coordinate 1 leftmost, `#` starting a comment
    /// line, blank lines ignored, duplicates rejected.
    pub fn parse(text: &str) -> Result<Code, Error> {
        let mut len: Option<u32> = None;
        let mut masks = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim_end_matches('\r');
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let no = idx + 1;
            let word: Word = line.parse().map_err(|e| match e {
                Error::Parse { msg, .. } => Error::Parse { line: no, msg },
                Error::InvalidLength(l) => Error::Parse {
                    line: no,
                    msg: format!("word length {l} out of range 1..=32"),
                },
                other => other,
            })?;
            match len {
                None => len = Some(word.len()),
                Some(l) if l != word.len() => {
                    return Err(Error::Parse {
                        line: no,
                        msg: format!("word length {} differs from {}", word.len(), l),
                    })
                }
                _ => {}
            }
            if !seen.insert(word.bits()) {
                return Err(Error::Parse {
                    line: no,
                    msg: format!("duplicate codeword {line}"),
                });
            }
            masks.push(word.bits());
        }
        let len = len.ok_or(Error::Parse {
            line: 0,
            msg: "no codewords found".into(),
        })?;
        Code::from_masks(len, masks)
    }

    /// Renders the code in the shared file format, one codeword per line
    /// in canonical (sorted) order.
    pub fn to_file_string(&self) -> String {
        let mut out = String::with_capacity(self.size() * (self.len as usize + 1));
        for w in self.words() {
            out.push_str(&w.to_string());
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Code(n={}, M={})", self.len, self.size())
    }
}

/// The vector `A_0..A_m` counting codewords of each weight.
#[derive(Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    counts: Vec<u64>,
}

impl WeightDistribution {
    /// Wraps a count vector; index `i` counts words of weight `i`, so the
    /// vector has `length + 1` entries.
    pub fn from_counts(counts: Vec<u64>) -> Self {
        assert!(!counts.is_empty());
        WeightDistribution { counts }
    }

    /// The word length `m` this distribution describes.
    pub fn length(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn get(&self, i: usize) -> u64 {
        self.counts.get(i).copied().unwrap_or(0)
    }

    /// Total number of codewords.
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.counts.len();
        (0..n / 2).all(|i| self.counts[i] == self.counts[n - 1 - i])
    }

    /// The reversed vector, i.e. the distribution of the complemented code.
    pub fn reversed(&self) -> WeightDistribution {
        let mut counts = self.counts.clone();
        counts.reverse();
        WeightDistribution { counts }
    }

    /// Entrywise sum of two distributions over the same length.
    pub fn add(&self, other: &WeightDistribution) -> Result<WeightDistribution, Error> {
        if self.length() != other.length() {
            return Err(Error::LengthMismatch {
                left: self.length() as u32,
                right: other.length() as u32,
            });
        }
        let counts = self
            .counts
            .iter()
            .zip(&other.counts)
            .map(|(a, b)| a + b)
            .collect();
        Ok(WeightDistribution { counts })
    }
}

impl fmt::Debug for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(words: &[&str]) -> Code {
        Code::from_words(words.iter().map(|s| s.parse::<Word>().unwrap())).unwrap()
    }

    #[test]
    fn distance_to_code_examples() {
        let c = code(&["000", "111"]);
        assert_eq!(c.distance(&"000".parse().unwrap()).unwrap(), 0);
        assert_eq!(c.distance(&"110".parse().unwrap()).unwrap(), 1);
    }

    #[test]
    fn min_distance_examples() {
        assert_eq!(code(&["000", "111"]).min_distance().unwrap(), 3);
        assert!(matches!(
            code(&["000"]).min_distance(),
            Err(Error::SingletonCode)
        ));
    }

    #[test]
    fn covering_radius_examples() {
        // All-ones is the farthest word from {000}.
        assert_eq!(code(&["000"]).covering_radius(24).unwrap(), 3);
        assert_eq!(code(&["000", "111"]).covering_radius(24).unwrap(), 1);
        let c = Code::from_masks(30, vec![0]).unwrap();
        assert!(matches!(
            c.covering_radius(24),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn translate_examples() {
        let c = code(&["000", "111"]);
        let zero = Word::zero(3).unwrap();
        assert_eq!(c.translate(&zero).unwrap(), c);
        let t = c.translate(&"100".parse().unwrap()).unwrap();
        assert_eq!(t, code(&["100", "011"]));
        // translating twice by the same word is the identity
        assert_eq!(t.translate(&"100".parse().unwrap()).unwrap(), c);
    }

    #[test]
    fn extend_examples() {
        let c = code(&["000", "111"]);
        assert_eq!(c.extend(Parity::Even).unwrap(), code(&["0000", "1111"]));
        assert_eq!(c.extend(Parity::Odd).unwrap(), code(&["0001", "1110"]));
    }

    #[test]
    fn puncture_examples() {
        let c = code(&["0000", "1111"]);
        assert_eq!(c.puncture(0).unwrap(), code(&["000", "111"]));
        // extend-then-puncture-last is the identity
        let base = code(&["000", "111"]);
        let ext = base.extend(Parity::Even).unwrap();
        assert_eq!(ext.puncture(3).unwrap(), base);
        // collapse is reported
        let bad = code(&["00", "01"]);
        assert!(matches!(
            bad.puncture(1),
            Err(Error::PunctureCollapse { .. })
        ));
    }

    #[test]
    fn complement_words_examples() {
        let c = code(&["000"]);
        assert_eq!(c.complement_words(), code(&["111"]));
        let d = code(&["0000", "1110", "0001", "1111"]);
        assert_eq!(d.complement_words().complement_words(), d);
        // weight histogram reverses under complement
        assert_eq!(
            d.complement_words().weight_distribution(),
            d.weight_distribution().reversed()
        );
    }

    #[test]
    fn weight_distribution_examples() {
        let c = code(&["000", "111"]);
        assert_eq!(c.weight_distribution().counts(), &[1, 0, 0, 1]);
        assert_eq!(c.weight_distribution().total(), 2);
    }

    #[test]
    fn parse_round_trip() {
        let text = "# repetition code\n000\n111\n";
        let c = Code::parse(text).unwrap();
        assert_eq!(c, code(&["000", "111"]));
        assert_eq!(c.to_file_string(), "000\n111\n");
        assert_eq!(Code::parse(&c.to_file_string()).unwrap(), c);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!(
            Code::parse("000\n000\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Code::parse("000\n0000\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Code::parse("# only a comment\n"),
            Err(Error::Parse { line: 0, .. })
        ));
        assert!(matches!(
            Code::parse("01a\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn codes_are_canonical_sets() {
        let a = code(&["111", "000"]);
        let b = code(&["000", "111"]);
        assert_eq!(a, b);
        assert!(Code::from_words(vec![
            "000".parse::<Word>().unwrap(),
            "000".parse::<Word>().unwrap()
        ])
        .is_err());
    }
}
