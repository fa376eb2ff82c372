//! Logical matrices `⟨A, F⟩`: filters, generated filters, the Leibniz
//! congruence and reduced models.

use std::fmt;

use thiserror::Error;

use crate::algebra::{AlgebraError, UnaryAlgebra};
use crate::partition::Partition;
use crate::subset::{Subset, MAX_CARRIER};

/// Default carrier cap for sweeps over all `2^m` subsets.
pub const DEFAULT_FILTER_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("subset {subset} is not contained in the carrier of size {size}")]
    SubsetOutOfRange { subset: Subset, size: usize },
    #[error("carrier of size {size} is too large for subset operations (max {MAX_CARRIER})")]
    CarrierTooLarge { size: usize },
    #[error("carrier of size {size} exceeds the sweep cap of {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("{subset} is not a filter")]
    NotFilter { subset: Subset },
    #[error("the characterization of reduced models assumes a non-trivial algebra")]
    TrivialAlgebra,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub(crate) fn check_subset(alg: &UnaryAlgebra, s: Subset) -> Result<(), ModelError> {
    if alg.size() > MAX_CARRIER {
        return Err(ModelError::CarrierTooLarge { size: alg.size() });
    }
    if s.bound() > alg.size() {
        return Err(ModelError::SubsetOutOfRange { subset: s, size: alg.size() });
    }
    Ok(())
}

pub(crate) fn check_cap(alg: &UnaryAlgebra, cap: usize) -> Result<(), ModelError> {
    if alg.size() > cap.min(MAX_CARRIER - 1) {
        return Err(ModelError::CapExceeded { size: alg.size(), cap });
    }
    Ok(())
}

/// An algebra with a designated subset.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    pub algebra: UnaryAlgebra,
    pub designated: Subset,
}

impl Matrix {
    pub fn new(algebra: UnaryAlgebra, designated: Subset) -> Result<Self, ModelError> {
        check_subset(&algebra, designated)?;
        Ok(Matrix { algebra, designated })
    }

    pub fn is_filter(&self) -> bool {
        is_filter(&self.algebra, self.designated).expect("validated on construction")
    }

    pub fn leibniz_congruence(&self) -> Partition {
        leibniz_congruence(&self.algebra, self.designated).expect("validated on construction")
    }

    pub fn is_reduced_model(&self) -> bool {
        is_reduced_model(&self.algebra, self.designated).expect("validated on construction")
    }
}

/// Which filter condition fails, and where.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FilterViolation {
    /// `a, ¬a ∈ F` but `F` is not the whole carrier.
    Explosion(usize),
    /// Exactly one of `a`, `¬¬a` is in `F`.
    DoubleNegation(usize),
}

impl fmt::Display for FilterViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FilterViolation::Explosion(a) => write!(f, "{a} and its negation are in F but F is proper"),
            FilterViolation::DoubleNegation(a) => write!(f, "{a} and its double negation disagree on F"),
        }
    }
}

pub fn filter_violation(alg: &UnaryAlgebra, f: Subset) -> Result<Option<FilterViolation>, ModelError> {
    check_subset(alg, f)?;
    let full = f == Subset::full(alg.size());
    for a in alg.elements() {
        if !full && f.contains(a) && f.contains(alg.neg(a)) {
            return Ok(Some(FilterViolation::Explosion(a)));
        }
        if f.contains(a) != f.contains(alg.neg(alg.neg(a))) {
            return Ok(Some(FilterViolation::DoubleNegation(a)));
        }
    }
    Ok(None)
}

/// `F` is a filter iff `a, ¬a ∈ F ⟹ F = A` and `a ∈ F ⟺ ¬¬a ∈ F`.
pub fn is_filter(alg: &UnaryAlgebra, f: Subset) -> Result<bool, ModelError> {
    Ok(filter_violation(alg, f)?.is_none())
}

/// All filters, sorted by size then elements. Always contains `∅` and `A`.
pub fn all_filters(alg: &UnaryAlgebra, cap: usize) -> Result<Vec<Subset>, ModelError> {
    check_cap(alg, cap)?;
    let mut out: Vec<Subset> =
        Subset::all(alg.size()).filter(|&s| filter_violation(alg, s).expect("in range").is_none()).collect();
    out.sort();
    Ok(out)
}

/// Whether `B` generates the whole carrier: some `b, b' ∈ B` have
/// `negˢ(b) = negᵗ(b')` with `s` even and `t` odd.
pub fn generates_everything(alg: &UnaryAlgebra, b: Subset) -> Result<bool, ModelError> {
    check_subset(alg, b)?;
    let even: Vec<u64> = alg.elements().map(|a| alg.even_orbit_mask(a)).collect();
    Ok(b.iter().any(|x| b.iter().any(|y| even[x] & even[alg.neg(y)] != 0)))
}

/// Least filter containing `B`, in closed form: the whole carrier when `B`
/// clashes, otherwise the elements whose even orbit meets the even orbit of
/// some member of `B`.
pub fn generate_filter(alg: &UnaryAlgebra, b: Subset) -> Result<Subset, ModelError> {
    if generates_everything(alg, b)? {
        return Ok(Subset::full(alg.size()));
    }
    let even: Vec<u64> = alg.elements().map(|a| alg.even_orbit_mask(a)).collect();
    let reach = b.iter().fold(0u64, |acc, x| acc | even[x]);
    Ok(alg.elements().filter(|&a| even[a] & reach != 0).collect())
}

/// Least filter containing `B`, by saturation: close under `a ↦ ¬¬a` and
/// `¬¬a ↦ a`, then explode if some `a, ¬a` both landed inside.
pub fn generate_filter_fixpoint(alg: &UnaryAlgebra, b: Subset) -> Result<Subset, ModelError> {
    check_subset(alg, b)?;
    let mut f = b;
    loop {
        let mut next = f;
        for a in alg.elements() {
            let nna = alg.neg(alg.neg(a));
            if f.contains(a) {
                next.insert(nna);
            }
            if f.contains(nna) {
                next.insert(a);
            }
        }
        if next == f {
            break;
        }
        f = next;
    }
    if f.iter().any(|a| f.contains(alg.neg(a))) {
        return Ok(Subset::full(alg.size()));
    }
    Ok(f)
}

/// Coarsest partition refining `{F, A∖F}` that `neg` respects, computed by
/// Moore-style refinement: split by `(block(a), block(¬a))` until stable.
///
/// Two elements end up together exactly when `negⁿa ∈ F ⟺ negⁿb ∈ F` for
/// every `n`, which is the Leibniz congruence for a single unary operation.
pub fn leibniz_congruence(alg: &UnaryAlgebra, f: Subset) -> Result<Partition, ModelError> {
    check_subset(alg, f)?;
    let mut p = Partition::from_key(alg.size(), |a| f.contains(a));
    loop {
        let next = Partition::from_key(alg.size(), |a| (p.block_of(a), p.block_of(alg.neg(a))));
        if next.num_blocks() == p.num_blocks() {
            return Ok(p);
        }
        p = next;
    }
}

pub fn is_reduced_model(alg: &UnaryAlgebra, f: Subset) -> Result<bool, ModelError> {
    Ok(is_filter(alg, f)? && leibniz_congruence(alg, f)?.is_identity())
}

/// The three-condition characterization of reduced models: `¬¬x ≈ x`,
/// `F = {a₀}` with `a₀ ≠ ¬a₀`, and `2 ≤ |A| ≤ 3`. Only stated for
/// non-trivial algebras.
pub fn reduced_model_theorem_check(alg: &UnaryAlgebra, f: Subset) -> Result<bool, ModelError> {
    check_subset(alg, f)?;
    if alg.size() < 2 {
        return Err(ModelError::TrivialAlgebra);
    }
    let singleton = f.len() == 1 && f.iter().all(|a| alg.neg(a) != a);
    Ok(alg.satisfies_double_negation() && singleton && alg.size() <= 3)
}

/// Membership in the class of algebra reducts of reduced models: isomorphic
/// to the trivial algebra, the two-cycle, or the two-cycle plus a fixpoint.
pub fn in_alg_star(alg: &UnaryAlgebra) -> bool {
    [UnaryAlgebra::a1(), UnaryAlgebra::a2(), UnaryAlgebra::a3()].iter().any(|b| alg.is_isomorphic(b))
}

/// Same class, decided by searching every designated subset for a reduced
/// model. Returns the first one found.
pub fn reduced_model_witness(alg: &UnaryAlgebra, cap: usize) -> Result<Option<Subset>, ModelError> {
    check_cap(alg, cap)?;
    Ok(Subset::all(alg.size()).find(|&f| is_reduced_model(alg, f).expect("in range")))
}
