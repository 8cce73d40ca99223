//! Integer partitions and the correspondence `I ↦ λ(I)` between `r`-element
//! index sets and partitions with at most `r` parts.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// Weakly decreasing positive parts; trailing zeros are normalized away so
/// `(2,1,0) == (2,1)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Accepts weakly decreasing parts, possibly with trailing zeros.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(alloc::format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    /// `(value^count)`, e.g. `rectangle(3, 2) = (3,3)`.
    pub fn rectangle(value: u32, count: usize) -> Self {
        if value == 0 {
            return Self::empty();
        }
        Self { parts: vec![value; count] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to exactly `len` entries.
    pub fn padded(&self, len: usize) -> Result<Vec<u32>> {
        if self.length() > len {
            return Err(Error::PartitionTooLong { length: self.length(), max: len });
        }
        let mut out = self.parts.clone();
        out.resize(len, 0);
        Ok(out)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::InvalidPartition(String::from(s)))?;
        if inner.trim().is_empty() {
            return Ok(Self::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|e| Error::InvalidPartition(e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

/// Strictly increasing set of nonnegative indices `i_1 < … < i_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet {
    indices: Vec<u32>,
}

impl IndexSet {
    pub fn new(indices: Vec<u32>) -> Result<Self> {
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotStrictlyIncreasing);
        }
        Ok(Self { indices })
    }

    /// `{0, 1, …, len-1}`.
    pub fn staircase(len: u32) -> Self {
        Self { indices: (0..len).collect() }
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn max(&self) -> Option<u32> {
        self.indices.last().copied()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.indices.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// `λ(I) = (i_r − (r−1), …, i_2 − 1, i_1)`.
pub fn lambda_of(set: &IndexSet) -> Partition {
    let parts = set
        .indices
        .iter()
        .enumerate()
        .rev()
        .map(|(j, &i)| i - j as u32)
        .collect();
    Partition::new(parts).expect("strictly increasing indices give weakly decreasing parts")
}

/// Inverse of [`lambda_of`] for index sets of size `r`.
pub fn index_set_of(lam: &Partition, r: usize) -> Result<IndexSet> {
    let padded = lam.padded(r)?;
    let indices = (0..r).map(|j| padded[r - 1 - j] + j as u32).collect();
    Ok(IndexSet { indices })
}

/// Partitions of `d` with at most `max_len` parts, each at most `max_part`
/// (`None` = unbounded), in descending lexicographic order.
pub fn enumerate_partitions(d: u32, max_len: usize, max_part: Option<u32>) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    let first_cap = max_part.unwrap_or(d).min(d);
    fill(d, first_cap, max_len, &mut current, &mut out);
    out
}

fn fill(remaining: u32, cap: u32, slots: usize, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    if slots == 0 {
        return;
    }
    // the remaining slots must be able to absorb what is left
    for part in (1..=cap.min(remaining)).rev() {
        if (part as u64) * (slots as u64) < remaining as u64 {
            break;
        }
        current.push(part);
        fill(remaining - part, part, slots - 1, current, out);
        current.pop();
    }
}
