//! Equivalence relations on `{0..m-1}`.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

/// An equivalence relation stored as a block assignment.
///
/// Block ids are contiguous from 0 and numbered in order of each block's
/// least element, so two partitions of the same carrier are equal exactly
/// when they relate the same pairs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    block: Vec<usize>,
}

impl Partition {
    /// Groups elements by an arbitrary key; equal keys share a block.
    pub fn from_key<K, F>(size: usize, mut key: F) -> Self
    where
        K: Eq + Hash,
        F: FnMut(usize) -> K,
    {
        let mut ids: HashMap<K, usize> = HashMap::new();
        let block = (0..size)
            .map(|a| {
                let next = ids.len();
                *ids.entry(key(a)).or_insert(next)
            })
            .collect();
        Partition { block }
    }

    /// Normalizes any labelling into canonical block ids.
    pub fn from_labels(labels: &[usize]) -> Self {
        Self::from_key(labels.len(), |a| labels[a])
    }

    /// Builds a partition from explicit blocks. Returns `None` unless the
    /// blocks cover `{0..size-1}` exactly once.
    pub fn from_blocks(size: usize, blocks: &[Vec<usize>]) -> Option<Self> {
        let mut label = vec![usize::MAX; size];
        for (id, b) in blocks.iter().enumerate() {
            for &a in b {
                if a >= size || label[a] != usize::MAX {
                    return None;
                }
                label[a] = id;
            }
        }
        if label.contains(&usize::MAX) {
            return None;
        }
        Some(Self::from_labels(&label))
    }

    pub fn identity(size: usize) -> Self {
        Partition { block: (0..size).collect() }
    }

    pub fn total(size: usize) -> Self {
        Partition { block: vec![0; size] }
    }

    pub fn size(&self) -> usize {
        self.block.len()
    }

    pub fn block_of(&self, a: usize) -> usize {
        self.block[a]
    }

    pub fn labels(&self) -> &[usize] {
        &self.block
    }

    pub fn num_blocks(&self) -> usize {
        self.block.iter().max().map_or(0, |m| m + 1)
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.block[a] == self.block[b]
    }

    pub fn is_identity(&self) -> bool {
        self.num_blocks() == self.size()
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (a, &b) in self.block.iter().enumerate() {
            out[b].push(a);
        }
        out
    }

    /// Common refinement.
    pub fn meet(&self, other: &Partition) -> Partition {
        assert_eq!(self.size(), other.size());
        Self::from_key(self.size(), |a| (self.block[a], other.block[a]))
    }

    /// Whether every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        assert_eq!(self.size(), other.size());
        let mut image = vec![usize::MAX; self.num_blocks()];
        self.block.iter().zip(&other.block).all(|(&b, &o)| {
            if image[b] == usize::MAX {
                image[b] = o;
            }
            image[b] == o
        })
    }

    /// All pairs `(a, b)` with `a < b` in the same block.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.size();
        (0..n).flat_map(move |a| (a + 1..n).filter(move |&b| self.related(a, b)).map(move |b| (a, b)))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `{0,2} {1}` style.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, b) in self.blocks().iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            let items: Vec<String> = b.iter().map(|a| a.to_string()).collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        Ok(())
    }
}
