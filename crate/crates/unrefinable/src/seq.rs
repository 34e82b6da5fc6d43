//! Star-sequence representation of partitions into distinct parts.
//!
//! A partition of `N` into distinct parts is stored as a sequence of slots
//! where slot `i` (1-based) either holds the part `i` or marks `i` as
//! missing, printed `*`. Keeping the missing slots explicit makes the
//! length of the sequence part of its identity: `1 2 *` and `1 2`
//! represent the same partition of 3 but are different sequences, and the
//! verification and enumeration machinery relies on that distinction.
//!
//! The text format is one sequence per line, tokens separated by
//! whitespace (commas are accepted too): token `i` is either the integer
//! `i` or `*`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Longest sequence the parser accepts.
pub const MAX_PARSE_LEN: usize = 1 << 31;

/// One coordinate of a [`StarSequence`]: the part equal to its 1-based
/// index, or a marker that the index is missing from the partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slot {
    Part,
    Missing,
}

/// A partition into distinct parts with explicit missing-part markers.
///
/// Slot `i` (1-based) is either `Part`, meaning the integer `i` belongs to
/// the partition, or `Missing`. The represented integer is the sum of all
/// part indices; the empty sequence represents the partition of 0.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct StarSequence {
    slots: Vec<Slot>,
}

/// Error from parsing the text form of a sequence.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    /// An integer token whose value does not equal its 1-based position.
    #[error("token {position} must be {position} or *")]
    MalformedSequence { position: usize, value: u64 },
    /// A token that is neither an integer nor `*`.
    #[error("token {position} is not an integer or *")]
    MalformedToken { position: usize, token: String },
    /// More than [`MAX_PARSE_LEN`] tokens.
    #[error("sequence longer than {MAX_PARSE_LEN} slots")]
    TooLong,
}

impl StarSequence {
    /// The empty sequence (the partition of 0, no slots).
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_slots(slots: Vec<Slot>) -> Self {
        StarSequence { slots }
    }

    /// Number of slots.
    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    /// Slot at 1-based `index`, or `None` past the end.
    pub fn slot(&self, index: usize) -> Option<Slot> {
        if index == 0 {
            return None;
        }
        self.slots.get(index - 1).copied()
    }

    /// True when `index` is a part of the partition.
    pub fn is_part(&self, index: usize) -> bool {
        self.slot(index) == Some(Slot::Part)
    }

    /// True when `index` is a missing part, i.e. a star at `index <= len`.
    /// Indexes beyond the length are not missing parts.
    pub fn is_missing(&self, index: usize) -> bool {
        self.slot(index) == Some(Slot::Missing)
    }

    /// Minimal excludant: the 1-based index of the leftmost star, or 0
    /// when the sequence has no star.
    pub fn mex(&self) -> usize {
        self.slots
            .iter()
            .position(|&s| s == Slot::Missing)
            .map_or(0, |i| i + 1)
    }

    /// The integer this sequence partitions: the sum of all part indices.
    pub fn sum(&self) -> u64 {
        self.parts().map(|i| i as u64).sum()
    }

    pub fn part_count(&self) -> usize {
        self.slots.iter().filter(|&&s| s == Slot::Part).count()
    }

    pub fn missing_count(&self) -> usize {
        self.len() - self.part_count()
    }

    /// Part indices in increasing order.
    pub fn parts(&self) -> impl Iterator<Item = usize> + '_ {
        self.slots
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == Slot::Part)
            .map(|(i, _)| i + 1)
    }

    /// Missing-part indices in increasing order.
    pub fn missing_parts(&self) -> impl Iterator<Item = usize> + '_ {
        self.slots
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == Slot::Missing)
            .map(|(i, _)| i + 1)
    }

    /// A copy of this sequence with the part `len + 1` appended.
    pub fn append_part(&self) -> StarSequence {
        let mut slots = self.slots.clone();
        slots.push(Slot::Part);
        StarSequence { slots }
    }

    /// A copy of this sequence with a star appended; the sum is unchanged.
    pub fn append_star(&self) -> StarSequence {
        let mut slots = self.slots.clone();
        slots.push(Slot::Missing);
        StarSequence { slots }
    }

    // In-place mutators for the enumeration walker's working buffer.
    pub(crate) fn push(&mut self, slot: Slot) {
        self.slots.push(slot);
    }

    pub(crate) fn truncate(&mut self, len: usize) {
        self.slots.truncate(len);
    }
}

impl FromStr for StarSequence {
    type Err = ParseError;

    /// Parses a whitespace- or comma-separated token list. Token `i` must
    /// be the integer `i` or `*`; the empty line is the empty sequence.
    fn from_str(text: &str) -> Result<Self, ParseError> {
        let mut slots = Vec::new();
        let tokens = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty());
        for (i, token) in tokens.enumerate() {
            let position = i + 1;
            if position > MAX_PARSE_LEN {
                return Err(ParseError::TooLong);
            }
            if token == "*" {
                slots.push(Slot::Missing);
                continue;
            }
            match token.parse::<u64>() {
                Ok(value) if value == position as u64 => slots.push(Slot::Part),
                Ok(value) => return Err(ParseError::MalformedSequence { position, value }),
                Err(_) => {
                    return Err(ParseError::MalformedToken {
                        position,
                        token: token.to_string(),
                    })
                }
            }
        }
        Ok(StarSequence { slots })
    }
}

impl fmt::Display for StarSequence {
    /// Canonical text form: single-space separated, `*` for missing slots.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, slot) in self.slots.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match slot {
                Slot::Part => write!(f, "{}", i + 1)?,
                Slot::Missing => f.write_str("*")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for StarSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StarSequence(\"{self}\")")
    }
}
