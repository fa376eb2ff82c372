//! Census of small algebras by isomorphism class: how many lie in the
//! intrinsic variety, in `Alg`, in `Alg*`, and how many reduced models they
//! carry.

use crate::algebra::{enumerate_algebras, AlgebraError, CanonicalCode, UnaryAlgebra};
use crate::gmatrix::{in_alg, in_v};
use crate::matrix::{in_alg_star, is_reduced_model};
use crate::subset::Subset;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CensusRow {
    pub size: usize,
    pub total_classes: usize,
    pub in_v: usize,
    pub in_alg: usize,
    pub in_alg_star: usize,
    /// Pairs (class representative, designated set) that are reduced models.
    pub reduced_matrix_count: usize,
}

impl CensusRow {
    /// `in_alg_star ≤ in_alg ≤ in_v ≤ total_classes`.
    pub fn is_monotone(&self) -> bool {
        self.in_alg_star <= self.in_alg && self.in_alg <= self.in_v && self.in_v <= self.total_classes
    }
}

/// Membership data for one isomorphism class.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassSummary {
    pub code: CanonicalCode,
    pub representative: UnaryAlgebra,
    pub in_v: bool,
    pub in_alg: bool,
    pub in_alg_star: bool,
    pub reduced_models: usize,
}

impl ClassSummary {
    pub fn of(alg: UnaryAlgebra) -> Self {
        let reduced_models =
            Subset::all(alg.size()).filter(|&f| is_reduced_model(&alg, f).expect("subset in range")).count();
        ClassSummary {
            code: alg.canonical_form(),
            in_v: in_v(&alg),
            in_alg: in_alg(&alg),
            in_alg_star: in_alg_star(&alg),
            reduced_models,
            representative: alg,
        }
    }
}

/// All classes of one size, in canonical-code order.
pub fn classes(size: usize, cap: usize) -> Result<Vec<ClassSummary>, AlgebraError> {
    Ok(enumerate_algebras(size, cap)?.into_iter().map(ClassSummary::of).collect())
}

pub fn row(size: usize, classes: &[ClassSummary]) -> CensusRow {
    let count = |p: fn(&ClassSummary) -> bool| classes.iter().filter(|c| p(c)).count();
    CensusRow {
        size,
        total_classes: classes.len(),
        in_v: count(|c| c.in_v),
        in_alg: count(|c| c.in_alg),
        in_alg_star: count(|c| c.in_alg_star),
        reduced_matrix_count: classes.iter().map(|c| c.reduced_models).sum(),
    }
}

/// One row per size `1..=max_size`.
pub fn census(max_size: usize, cap: usize) -> Result<Vec<CensusRow>, AlgebraError> {
    if max_size > cap {
        return Err(AlgebraError::CapExceeded { size: max_size, cap });
    }
    (1..=max_size).map(|m| Ok(row(m, &classes(m, cap)?))).collect()
}
