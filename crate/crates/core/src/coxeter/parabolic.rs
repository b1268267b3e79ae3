use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A subset of the simple reflections `{s_1, ..., s_r}`, stored as a bit set.
///
/// Bit `i - 1` stands for `s_i`. Indices are 1-based everywhere in the public
/// surface to match the usual Dynkin labelling.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct ParabolicSet(u32);

impl ParabolicSet {
    pub const EMPTY: ParabolicSet = ParabolicSet(0);

    pub fn from_bits(bits: u32) -> Self {
        ParabolicSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// All of `s_1, ..., s_rank`.
    pub fn full(rank: usize) -> Self {
        ParabolicSet(((1u64 << rank) - 1) as u32)
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i >= 1);
        ParabolicSet(1 << (i - 1))
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices
            .into_iter()
            .fold(Self::EMPTY, |acc, i| acc.union(Self::singleton(i)))
    }

    pub fn contains(self, i: usize) -> bool {
        i >= 1 && i <= 32 && self.0 & (1 << (i - 1)) != 0
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << (i - 1);
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << (i - 1));
    }

    pub fn without(self, i: usize) -> Self {
        ParabolicSet(self.0 & !(1 << (i - 1)))
    }

    pub fn with(self, i: usize) -> Self {
        ParabolicSet(self.0 | (1 << (i - 1)))
    }

    pub fn union(self, other: Self) -> Self {
        ParabolicSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ParabolicSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ParabolicSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest index in the set.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Indices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |b| bits & (1 << b) != 0).map(|b| b + 1)
    }

    /// Every subset of `self`, in increasing bit order.
    pub fn subsets(self) -> impl Iterator<Item = ParabolicSet> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(ParabolicSet(cur))
        })
    }
}

impl fmt::Display for ParabolicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for ParabolicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl FromStr for ParabolicSet {
    type Err = Error;

    /// Parses a comma list such as `"1,3"`; braces and spaces are tolerated and
    /// an empty string is the empty set.
    fn from_str(s: &str) -> Result<Self, Error> {
        let trimmed = s.trim().trim_start_matches('{').trim_end_matches('}');
        let mut set = ParabolicSet::EMPTY;
        for part in trimmed.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let i: usize = part
                .parse()
                .map_err(|_| Error::Parse(format!("bad simple reflection index {part:?}")))?;
            if i == 0 || i > 32 {
                return Err(Error::Parse(format!("simple reflection index {i} out of range")));
            }
            set.insert(i);
        }
        Ok(set)
    }
}

impl From<ParabolicSet> for Vec<usize> {
    fn from(set: ParabolicSet) -> Self {
        set.iter().collect()
    }
}

impl TryFrom<Vec<usize>> for ParabolicSet {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self, Error> {
        if let Some(&bad) = v.iter().find(|&&i| i == 0 || i > 32) {
            return Err(Error::Parse(format!("simple reflection index {bad} out of range")));
        }
        Ok(ParabolicSet::from_indices(v))
    }
}
