//! Finite ground sets and bitmask-encoded subsets.

use std::fmt;

use crate::error::{Error, Result};

/// Hard cap on the number of points: the pan DP is 3^n and property scans
/// are 4^n, so 16 is the desk-scale ceiling.
pub const MAX_POINTS: usize = 16;

/// A nonempty finite ground set with labelled points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSpace {
    labels: Vec<String>,
}

impl FiniteSpace {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() || labels.len() > MAX_POINTS {
            return Err(Error::BadSpaceSize(labels.len()));
        }
        for (i, a) in labels.iter().enumerate() {
            if labels[..i].contains(a) {
                return Err(Error::DuplicateLabel(a.clone()));
            }
        }
        Ok(FiniteSpace { labels })
    }

    /// Space with default labels `x1..xn`.
    pub fn of_size(n: usize) -> Result<Self> {
        FiniteSpace::new((1..=n).map(|i| format!("x{i}")).collect())
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// The full set X as a subset index.
    pub fn full_set(&self) -> SubsetIndex {
        SubsetIndex::full(self.n())
    }

    /// All subsets, ascending by index (including the empty set).
    pub fn subsets(&self) -> impl Iterator<Item = SubsetIndex> {
        (0..(1u32 << self.n())).map(SubsetIndex)
    }

    /// All nonempty subsets, ascending.
    pub fn nonempty_subsets(&self) -> impl Iterator<Item = SubsetIndex> {
        (1..(1u32 << self.n())).map(SubsetIndex)
    }
}

/// A subset of the ground set, encoded as a bitmask: bit `i` set means the
/// point `i` is a member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetIndex(pub u32);

impl SubsetIndex {
    pub const EMPTY: SubsetIndex = SubsetIndex(0);

    pub fn full(n: usize) -> SubsetIndex {
        SubsetIndex(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(i: usize) -> SubsetIndex {
        SubsetIndex(1 << i)
    }

    /// Build from strictly ascending 0-based point indices.
    pub fn from_points(points: &[usize], n: usize) -> Result<SubsetIndex> {
        let mut mask = 0u32;
        let mut prev: Option<usize> = None;
        for &p in points {
            if p >= n {
                return Err(Error::Parse(format!("point index {p} out of range for n={n}")));
            }
            if let Some(q) = prev {
                if p <= q {
                    return Err(Error::Parse(
                        "set indices must be strictly ascending".into(),
                    ));
                }
            }
            prev = Some(p);
            mask |= 1 << p;
        }
        Ok(SubsetIndex(mask))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, point: usize) -> bool {
        self.0 & (1 << point) != 0
    }

    pub fn is_subset_of(self, other: SubsetIndex) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: SubsetIndex) -> SubsetIndex {
        SubsetIndex(self.0 | other.0)
    }

    pub fn intersection(self, other: SubsetIndex) -> SubsetIndex {
        SubsetIndex(self.0 & other.0)
    }

    pub fn difference(self, other: SubsetIndex) -> SubsetIndex {
        SubsetIndex(self.0 & !other.0)
    }

    pub fn complement_in(self, n: usize) -> SubsetIndex {
        SubsetIndex(!self.0 & SubsetIndex::full(n).0)
    }

    pub fn is_disjoint_from(self, other: SubsetIndex) -> bool {
        self.0 & other.0 == 0
    }

    /// Member points, ascending.
    pub fn points(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let p = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(p)
            }
        })
    }

    /// Ascending point-index vector (the JSON wire form of a set).
    pub fn to_points(self) -> Vec<usize> {
        self.points().collect()
    }

    /// All subsets of `self` (including empty and `self`), ascending.
    pub fn subsets(self) -> impl Iterator<Item = SubsetIndex> {
        let bits: Vec<u32> = self.points().map(|p| 1u32 << p).collect();
        (0u32..(1 << bits.len())).map(move |m| {
            let mut mask = 0;
            for (j, b) in bits.iter().enumerate() {
                if m & (1 << j) != 0 {
                    mask |= b;
                }
            }
            SubsetIndex(mask)
        })
    }
}

impl fmt::Display for SubsetIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, p) in self.points().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}
