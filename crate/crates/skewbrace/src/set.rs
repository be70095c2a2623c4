//! Subsets of a structure carrier, kept sorted and deduplicated.
//!
//! An [`ElemSet`] is the common currency for subgroups, sub-braces and
//! ideals: a strictly increasing list of carrier indices.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A canonically ordered subset of `{0, …, n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElemSet {
    members: Vec<usize>,
}

impl ElemSet {
    /// The empty set.
    pub fn empty() -> Self {
        ElemSet { members: Vec::new() }
    }

    /// The singleton `{0}`.
    pub fn zero() -> Self {
        ElemSet { members: vec![0] }
    }

    /// The full carrier `{0, …, n-1}`.
    pub fn full(n: usize) -> Self {
        ElemSet { members: (0..n).collect() }
    }

    pub fn singleton(x: usize) -> Self {
        ElemSet { members: vec![x] }
    }

    /// Builds a set from arbitrary (possibly unsorted, repeated) indices.
    pub fn from_unsorted(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        ElemSet { members }
    }

    /// Builds a set from a membership bitmap.
    pub fn from_bitmap(bits: &[bool]) -> Self {
        ElemSet {
            members: bits
                .iter()
                .enumerate()
                .filter_map(|(i, &b)| b.then_some(i))
                .collect(),
        }
    }

    pub fn to_bitmap(&self, n: usize) -> Vec<bool> {
        let mut bits = vec![false; n];
        for &m in &self.members {
            bits[m] = true;
        }
        bits
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    pub fn is_subset_of(&self, other: &ElemSet) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        let mut members = self.members.clone();
        members.extend_from_slice(&other.members);
        ElemSet::from_unsorted(members)
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        ElemSet {
            members: self
                .members
                .iter()
                .copied()
                .filter(|&m| other.contains(m))
                .collect(),
        }
    }
}

impl fmt::Display for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        ElemSet::from_unsorted(iter.into_iter().collect())
    }
}
