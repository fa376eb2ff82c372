//! Subsets of a finite carrier `{0..m-1}` as 64-bit masks.
//!
//! Designated sets, filters and closure-system members are all small (the
//! exhaustive sweeps cap carriers well below 64), so a single machine word is
//! enough. Anything that takes a `Subset` rejects carriers larger than
//! [`MAX_CARRIER`].

use std::cmp::Ordering;
use std::fmt;

/// Largest carrier on which subsets can be represented.
pub const MAX_CARRIER: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// The whole carrier `{0..size-1}`.
    pub fn full(size: usize) -> Self {
        assert!(size <= MAX_CARRIER, "carrier of size {size} exceeds {MAX_CARRIER}");
        if size == MAX_CARRIER {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << size) - 1)
        }
    }

    pub fn singleton(a: usize) -> Self {
        assert!(a < MAX_CARRIER);
        Subset(1u64 << a)
    }

    pub fn contains(self, a: usize) -> bool {
        a < MAX_CARRIER && self.0 >> a & 1 == 1
    }

    pub fn insert(&mut self, a: usize) {
        assert!(a < MAX_CARRIER);
        self.0 |= 1u64 << a;
    }

    pub fn with(mut self, a: usize) -> Self {
        self.insert(a);
        self
    }

    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Largest element plus one, or 0 for the empty set.
    pub fn bound(self) -> usize {
        MAX_CARRIER - self.0.leading_zeros() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let a = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(a)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Every subset of `{0..size-1}`, in mask order.
    pub fn all(size: usize) -> impl Iterator<Item = Subset> {
        assert!(size < MAX_CARRIER, "cannot sweep all subsets of a {size}-element carrier");
        (0..1u64 << size).map(Subset)
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Subset::EMPTY;
        for a in iter {
            s.insert(a);
        }
        s
    }
}

/// Ordered by cardinality first, then by the sorted element lists.
impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `{0,2}` style; the empty set prints as `{}`.
impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, a) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}
