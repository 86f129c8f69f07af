//! Bit-vector subsets of a carrier with at most 64 elements.
//!
//! Subsets are the currency of the whole crate: ideals, grading components,
//! set products and coset blocks are all `SubsetMask` values. Keeping them in
//! one machine word is what makes exhaustive enumeration affordable.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};

/// Largest supported carrier size.
pub const MAX_CARRIER: usize = 64;

/// A subset of `{0, .., universe-1}` stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubsetMask {
    bits: u64,
    universe: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("index {index} out of range for carrier of order {universe}")]
pub struct IndexOutOfRange {
    pub index: usize,
    pub universe: usize,
}

fn universe_bits(universe: usize) -> u64 {
    assert!(
        (1..=MAX_CARRIER).contains(&universe),
        "carrier order {universe} outside 1..=64"
    );
    if universe == 64 {
        u64::MAX
    } else {
        (1u64 << universe) - 1
    }
}

impl SubsetMask {
    pub fn empty(universe: usize) -> Self {
        universe_bits(universe);
        Self {
            bits: 0,
            universe: universe as u8,
        }
    }

    pub fn full(universe: usize) -> Self {
        Self {
            bits: universe_bits(universe),
            universe: universe as u8,
        }
    }

    pub fn singleton(universe: usize, index: usize) -> Self {
        let mut m = Self::empty(universe);
        m.insert(index);
        m
    }

    pub fn from_indices<I>(universe: usize, indices: I) -> Result<Self, IndexOutOfRange>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut m = Self::empty(universe);
        for i in indices {
            if i >= universe {
                return Err(IndexOutOfRange { index: i, universe });
            }
            m.insert(i);
        }
        Ok(m)
    }

    pub fn universe(&self) -> usize {
        self.universe as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.universe() && (self.bits >> index) & 1 == 1
    }

    pub fn insert(&mut self, index: usize) {
        assert!(index < self.universe(), "index {index} outside carrier");
        self.bits |= 1 << index;
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    fn same_universe(&self, other: &Self) {
        assert_eq!(
            self.universe, other.universe,
            "subset operation across different carriers"
        );
    }

    pub fn union(&self, other: &Self) -> Self {
        self.same_universe(other);
        Self {
            bits: self.bits | other.bits,
            universe: self.universe,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.same_universe(other);
        Self {
            bits: self.bits & other.bits,
            universe: self.universe,
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.same_universe(other);
        Self {
            bits: self.bits & !other.bits,
            universe: self.universe,
        }
    }

    pub fn complement(&self) -> Self {
        Self {
            bits: !self.bits & universe_bits(self.universe()),
            universe: self.universe,
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.same_universe(other);
        self.bits & !other.bits == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (0..self.universe()).filter(move |i| (bits >> i) & 1 == 1)
    }

    /// Strictly increasing index list — the canonical serialized form.
    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Canonical order: smaller sets first, ties broken lexicographically on
    /// the ascending index list (the set containing the smallest differing
    /// index comes first).
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.universe
            .cmp(&other.universe)
            .then(self.len().cmp(&other.len()))
            .then_with(|| {
                let diff = self.bits ^ other.bits;
                if diff == 0 {
                    Ordering::Equal
                } else if self.bits & (diff & diff.wrapping_neg()) != 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            })
    }
}

impl PartialOrd for SubsetMask {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SubsetMask {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other)
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for SubsetMask {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for i in self.iter() {
            seq.serialize_element(&i)?;
        }
        seq.end()
    }
}
