//! Finite algebras with one unary operation, viewed as functional graphs.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::partition::Partition;

/// Default upper bound on the size for exhaustive enumeration.
pub const DEFAULT_ENUMERATION_CAP: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("an algebra needs at least one element")]
    EmptyCarrier,
    #[error("neg({element}) = {image} is outside the carrier of size {size}")]
    ImageOutOfRange { element: usize, image: usize, size: usize },
    #[error("element {element} is outside the carrier of size {size}")]
    ElementOutOfRange { element: usize, size: usize },
    #[error("partition covers {found} elements, algebra has {expected}")]
    PartitionSize { found: usize, expected: usize },
    #[error("partition is not a congruence: {a} ~ {b} but neg({a}) !~ neg({b})")]
    NotCongruence { a: usize, b: usize },
    #[error("size {size} exceeds the cap of {cap}")]
    CapExceeded { size: usize, cap: usize },
}

/// A carrier `{0..m-1}` with a total unary operation `neg`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnaryAlgebra {
    neg: Vec<usize>,
}

impl UnaryAlgebra {
    pub fn new(neg: Vec<usize>) -> Result<Self, AlgebraError> {
        if neg.is_empty() {
            return Err(AlgebraError::EmptyCarrier);
        }
        let size = neg.len();
        if let Some((element, &image)) = neg.iter().enumerate().find(|(_, &b)| b >= size) {
            return Err(AlgebraError::ImageOutOfRange { element, image, size });
        }
        Ok(UnaryAlgebra { neg })
    }

    fn known(neg: &[usize]) -> Self {
        Self::new(neg.to_vec()).expect("valid table")
    }

    /// The two-element negation algebra `{0,1}` with `¬` swapping.
    pub fn two_neg() -> Self {
        Self::known(&[1, 0])
    }

    /// The trivial algebra.
    pub fn a1() -> Self {
        Self::known(&[0])
    }

    /// `{a,b}` with `¬a = b`, `¬b = a`.
    pub fn a2() -> Self {
        Self::known(&[1, 0])
    }

    /// `{a,b,c}` with `¬a = b`, `¬b = a`, `¬c = c`.
    pub fn a3() -> Self {
        Self::known(&[1, 0, 2])
    }

    /// Negation reduct of the four-element Boolean algebra, with `0 ↔ 1`
    /// the bounds and `2 ↔ 3` the atoms.
    pub fn bool4_neg() -> Self {
        Self::known(&[1, 0, 3, 2])
    }

    /// Two fixpoints.
    pub fn two_fix() -> Self {
        Self::known(&[0, 1])
    }

    pub fn size(&self) -> usize {
        self.neg.len()
    }

    pub fn table(&self) -> &[usize] {
        &self.neg
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size()
    }

    /// `neg(a)`. Panics if `a` is out of range.
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn check_element(&self, a: usize) -> Result<(), AlgebraError> {
        if a < self.size() {
            Ok(())
        } else {
            Err(AlgebraError::ElementOutOfRange { element: a, size: self.size() })
        }
    }

    /// `negⁿ(a)`, reduced through the orbit of `a` so large `n` is cheap.
    pub fn neg_power(&self, a: usize, n: u64) -> Result<usize, AlgebraError> {
        Ok(self.orbit(a)?.at(n))
    }

    pub fn orbit(&self, a: usize) -> Result<OrbitInfo, AlgebraError> {
        self.check_element(a)?;
        let mut seen = vec![usize::MAX; self.size()];
        let mut trace = Vec::new();
        let mut x = a;
        while seen[x] == usize::MAX {
            seen[x] = trace.len();
            trace.push(x);
            x = self.neg[x];
        }
        let pre_period = seen[x];
        Ok(OrbitInfo { pre_period, cycle_length: trace.len() - pre_period, trace })
    }

    /// `{negˢ(a) : s even}`, sorted.
    pub fn even_orbit(&self, a: usize) -> Result<Vec<usize>, AlgebraError> {
        self.check_element(a)?;
        let mut seen = vec![false; self.size()];
        let mut x = a;
        while !seen[x] {
            seen[x] = true;
            x = self.neg[self.neg[x]];
        }
        Ok(self.elements().filter(|&b| seen[b]).collect())
    }

    pub(crate) fn even_orbit_mask(&self, a: usize) -> u64 {
        self.even_orbit(a).expect("element in range").into_iter().fold(0, |m, b| m | 1 << b)
    }

    fn check_partition(&self, p: &Partition) -> Result<(), AlgebraError> {
        if p.size() != self.size() {
            return Err(AlgebraError::PartitionSize { found: p.size(), expected: self.size() });
        }
        Ok(())
    }

    /// The first pair in the same block whose images are split, if any.
    pub fn congruence_violation(&self, p: &Partition) -> Result<Option<(usize, usize)>, AlgebraError> {
        self.check_partition(p)?;
        let mut rep: Vec<Option<usize>> = vec![None; p.num_blocks()];
        for a in self.elements() {
            match rep[p.block_of(a)] {
                None => rep[p.block_of(a)] = Some(a),
                Some(r) if !p.related(self.neg[r], self.neg[a]) => return Ok(Some((r, a))),
                Some(_) => {}
            }
        }
        Ok(None)
    }

    pub fn is_congruence(&self, p: &Partition) -> Result<bool, AlgebraError> {
        Ok(self.congruence_violation(p)?.is_none())
    }

    /// The quotient algebra on block ids, with the projection `a ↦ block(a)`.
    pub fn quotient(&self, p: &Partition) -> Result<(UnaryAlgebra, Vec<usize>), AlgebraError> {
        if let Some((a, b)) = self.congruence_violation(p)? {
            return Err(AlgebraError::NotCongruence { a, b });
        }
        let mut neg = vec![0; p.num_blocks()];
        for a in self.elements() {
            neg[p.block_of(a)] = p.block_of(self.neg[a]);
        }
        Ok((UnaryAlgebra { neg }, p.labels().to_vec()))
    }

    /// Every congruence, found by closing each set partition under `neg`.
    /// Exponential (Bell numbers); meant for carriers of a handful of elements.
    pub fn congruences(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut labels = vec![0; self.size()];
        fn walk(alg: &UnaryAlgebra, k: usize, blocks: usize, labels: &mut [usize], out: &mut Vec<Partition>) {
            if k == labels.len() {
                let p = Partition::from_labels(labels);
                if alg.is_congruence(&p).expect("sizes match") {
                    out.push(p);
                }
                return;
            }
            for b in 0..=blocks {
                labels[k] = b;
                walk(alg, k + 1, blocks.max(b + 1), labels, out);
            }
        }
        walk(self, 0, 0, &mut labels, &mut out);
        out
    }

    pub fn satisfies_double_negation(&self) -> bool {
        self.double_negation_violation().is_none()
    }

    /// Least `a` with `¬¬a ≠ a`.
    pub fn double_negation_violation(&self) -> Option<usize> {
        self.elements().find(|&a| self.neg[self.neg[a]] != a)
    }

    pub fn fixpoints(&self) -> Vec<usize> {
        self.elements().filter(|&a| self.neg[a] == a).collect()
    }

    /// At most one `a` with `¬a = a`.
    pub fn satisfies_unique_fixpoint(&self) -> bool {
        self.fixpoints().len() <= 1
    }

    /// Isomorphism-invariant code; equal iff the algebras are isomorphic.
    pub fn canonical_form(&self) -> CanonicalCode {
        canonical_code(self)
    }

    pub fn is_isomorphic(&self, other: &UnaryAlgebra) -> bool {
        self.size() == other.size() && self.canonical_form() == other.canonical_form()
    }

    /// Image of the algebra under a relabelling `a ↦ perm[a]`.
    pub fn relabel(&self, perm: &[usize]) -> UnaryAlgebra {
        assert_eq!(perm.len(), self.size());
        let mut neg = vec![0; self.size()];
        for a in self.elements() {
            neg[perm[a]] = perm[self.neg[a]];
        }
        UnaryAlgebra { neg }
    }
}

impl fmt::Debug for UnaryAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UnaryAlgebra{:?}", self.neg)
    }
}

/// Tail-and-cycle shape of `a, ¬a, ¬²a, …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitInfo {
    pub pre_period: usize,
    pub cycle_length: usize,
    /// `¬⁰a … ¬^(ρ+π-1)a`, all distinct.
    pub trace: Vec<usize>,
}

impl OrbitInfo {
    pub fn at(&self, n: u64) -> usize {
        let tail = self.pre_period as u64;
        let idx = if n < tail { n } else { tail + (n - tail) % self.cycle_length as u64 };
        self.trace[idx as usize]
    }
}

/// Canonical code of a functional graph.
///
/// Trees hanging off the cycles are encoded bottom-up as `(` children `)`
/// with children sorted; each cycle is `[` followed by the least rotation of
/// its nodes' tree codes, then `]`; the algebra is the sorted concatenation
/// of its cycle codes. All pieces are balanced bracket strings, so the
/// concatenations are unambiguous.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&String::from_utf8_lossy(&self.0))
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({self})")
    }
}

fn canonical_code(alg: &UnaryAlgebra) -> CanonicalCode {
    let m = alg.size();
    // cyclic nodes: repeatedly strip nodes with no preimage
    let mut indegree = vec![0usize; m];
    for a in alg.elements() {
        indegree[alg.neg(a)] += 1;
    }
    let mut on_cycle = vec![true; m];
    let mut stack: Vec<usize> = alg.elements().filter(|&a| indegree[a] == 0).collect();
    let mut peel_order = Vec::with_capacity(m);
    while let Some(a) = stack.pop() {
        on_cycle[a] = false;
        peel_order.push(a);
        let b = alg.neg(a);
        indegree[b] -= 1;
        if indegree[b] == 0 {
            stack.push(b);
        }
    }

    // tree codes, leaves first: every tree node is peeled before its image
    let mut children: Vec<Vec<Vec<u8>>> = vec![Vec::new(); m];
    let mut code: Vec<Vec<u8>> = vec![Vec::new(); m];
    let finish = |a: usize, children: &mut Vec<Vec<Vec<u8>>>| {
        let mut kids = std::mem::take(&mut children[a]);
        kids.sort();
        let mut c = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
        c.push(b'(');
        for k in kids {
            c.extend(k);
        }
        c.push(b')');
        c
    };
    for &a in &peel_order {
        let c = finish(a, &mut children);
        children[alg.neg(a)].push(c.clone());
        code[a] = c;
    }
    for a in alg.elements().filter(|&a| on_cycle[a]) {
        code[a] = finish(a, &mut children);
    }

    let mut visited = vec![false; m];
    let mut cycles: Vec<Vec<u8>> = Vec::new();
    for start in alg.elements() {
        if !on_cycle[start] || visited[start] {
            continue;
        }
        let mut nodes = Vec::new();
        let mut a = start;
        while !visited[a] {
            visited[a] = true;
            nodes.push(&code[a]);
            a = alg.neg(a);
        }
        let k = nodes.len();
        let best = (0..k)
            .min_by(|&r, &s| (0..k).map(|i| nodes[(r + i) % k]).cmp((0..k).map(|i| nodes[(s + i) % k])))
            .expect("cycle is non-empty");
        let mut c = vec![b'['];
        for i in 0..k {
            c.extend_from_slice(nodes[(best + i) % k]);
        }
        c.push(b']');
        cycles.push(c);
    }
    cycles.sort();
    CanonicalCode(cycles.concat())
}

/// Decodes `index` as a base-`m` table, least significant digit first.
fn table_from_index(m: usize, mut index: usize) -> Vec<usize> {
    let mut neg = vec![0; m];
    for slot in neg.iter_mut() {
        *slot = index % m;
        index /= m;
    }
    neg
}

/// All `mᵐ` operation tables on `{0..m-1}`, in index order.
pub fn all_tables(m: usize) -> impl Iterator<Item = UnaryAlgebra> {
    assert!(m >= 1);
    (0..m.pow(m as u32)).map(move |i| UnaryAlgebra { neg: table_from_index(m, i) })
}

/// One representative per isomorphism class of `m`-element algebras, sorted
/// by canonical code. The representative is the least table of its class.
pub fn enumerate_algebras(m: usize, cap: usize) -> Result<Vec<UnaryAlgebra>, AlgebraError> {
    if m == 0 {
        return Err(AlgebraError::EmptyCarrier);
    }
    if m > cap {
        return Err(AlgebraError::CapExceeded { size: m, cap });
    }
    let total = m.pow(m as u32);
    let classes: BTreeMap<CanonicalCode, UnaryAlgebra> = (0..total)
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc: BTreeMap<CanonicalCode, UnaryAlgebra>, i| {
            let alg = UnaryAlgebra { neg: table_from_index(m, i) };
            let code = alg.canonical_form();
            match acc.get(&code) {
                Some(rep) if *rep <= alg => {}
                _ => {
                    acc.insert(code, alg);
                }
            }
            acc
        })
        .reduce(BTreeMap::new, |mut left, right| {
            for (code, alg) in right {
                match left.get(&code) {
                    Some(rep) if *rep <= alg => {}
                    _ => {
                        left.insert(code, alg);
                    }
                }
            }
            left
        });
    Ok(classes.into_values().collect())
}
