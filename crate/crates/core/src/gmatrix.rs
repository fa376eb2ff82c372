//! Generalized matrices `⟨A, 𝒞⟩` with `𝒞` a closure system on a finite
//! unary algebra.
//!
//! Besides the closure operator itself this module computes the Tarski
//! congruence and the Frege relation, decides fullness two independent ways
//! (the seven conditions F1–F7 and comparison of the reduction against the
//! filters of the quotient), and hosts the class-membership tests for the
//! intrinsic variety and for `Alg`.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::algebra::{AlgebraError, UnaryAlgebra};
use crate::matrix::{self, check_cap, check_subset, ModelError};
use crate::partition::Partition;
use crate::subset::Subset;

/// Default carrier cap for the subset sweeps in [`ClosureSystem::check_full`].
pub const DEFAULT_FULL_CAP: usize = 12;

/// Largest carrier for which [`enumerate_closure_systems`] is offered.
pub const MAX_ENUMERATED_CARRIER: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GMatrixError {
    #[error("family does not contain the carrier")]
    MissingCarrier,
    #[error("family is not closed under intersection: {0} ∩ {1} is missing")]
    NotIntersectionClosed(Subset, Subset),
    #[error("map has {found} entries, carrier has {expected}")]
    MapSize { found: usize, expected: usize },
    #[error("map sends {element} to {image}, outside the target carrier of size {size}")]
    MapOutOfRange { element: usize, image: usize, size: usize },
    #[error("map is not a homomorphism: h(neg {element}) != neg h({element})")]
    NotHomomorphism { element: usize },
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// An intersection-closed family of subsets that contains the carrier.
/// The empty set need not be a member.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClosureSystem {
    algebra: UnaryAlgebra,
    family: Vec<Subset>,
}

impl ClosureSystem {
    pub fn new<I>(algebra: UnaryAlgebra, family: I) -> Result<Self, GMatrixError>
    where
        I: IntoIterator<Item = Subset>,
    {
        let family: BTreeSet<Subset> = family.into_iter().collect();
        for &s in &family {
            check_subset(&algebra, s)?;
        }
        let top = Subset::full(algebra.size());
        if !family.contains(&top) {
            return Err(GMatrixError::MissingCarrier);
        }
        for &s in &family {
            for &t in family.range(s..) {
                if !family.contains(&s.intersection(t)) {
                    return Err(GMatrixError::NotIntersectionClosed(s, t));
                }
            }
        }
        Ok(ClosureSystem { algebra, family: family.into_iter().collect() })
    }

    /// The least closure system containing `members`: adds the carrier and
    /// all intersections.
    pub fn generated_by<I>(algebra: UnaryAlgebra, members: I) -> Result<Self, GMatrixError>
    where
        I: IntoIterator<Item = Subset>,
    {
        let mut family: BTreeSet<Subset> = BTreeSet::new();
        family.insert(Subset::full(algebra.size()));
        for s in members {
            check_subset(&algebra, s)?;
            let meets: Vec<Subset> = family.iter().map(|&t| t.intersection(s)).collect();
            family.insert(s);
            family.extend(meets);
        }
        Self::new(algebra, family)
    }

    pub fn algebra(&self) -> &UnaryAlgebra {
        &self.algebra
    }

    /// Members sorted by size, then elements.
    pub fn family(&self) -> &[Subset] {
        &self.family
    }

    fn carrier(&self) -> Subset {
        Subset::full(self.algebra.size())
    }

    /// Intersection of all members containing `x`.
    pub fn closure(&self, x: Subset) -> Result<Subset, GMatrixError> {
        check_subset(&self.algebra, x)?;
        Ok(self.close(x))
    }

    fn close(&self, x: Subset) -> Subset {
        self.family.iter().filter(|s| x.is_subset_of(**s)).fold(self.carrier(), |acc, &s| acc.intersection(s))
    }

    fn singleton_closures(&self) -> Vec<Subset> {
        self.algebra.elements().map(|a| self.close(Subset::singleton(a))).collect()
    }

    /// First member that is not a filter.
    pub fn non_filter_member(&self) -> Option<Subset> {
        self.family.iter().copied().find(|&s| !matrix::is_filter(&self.algebra, s).expect("validated"))
    }

    /// Every member is a filter.
    pub fn is_gmodel(&self) -> bool {
        self.non_filter_member().is_none()
    }

    /// Meet of the Leibniz congruences of all members.
    pub fn tarski_congruence(&self) -> Partition {
        self.family
            .iter()
            .map(|&s| matrix::leibniz_congruence(&self.algebra, s).expect("validated"))
            .fold(Partition::total(self.algebra.size()), |acc, p| acc.meet(&p))
    }

    /// `a ~ b` iff `C(a) = C(b)`.
    pub fn frege_relation(&self) -> Partition {
        let closures = self.singleton_closures();
        Partition::from_key(self.algebra.size(), |a| closures[a])
    }

    /// Evaluates F1–F7 with a witness for every failed condition, alongside
    /// the Tarski congruence and Frege relation.
    pub fn check_full(&self, cap: usize) -> Result<GMatrixReport, GMatrixError> {
        check_cap(&self.algebra, cap)?;
        let alg = &self.algebra;
        let top = self.carrier();
        let c1 = self.singleton_closures();
        let neg = |a: usize| alg.neg(a);
        let elems = || alg.elements();

        let c_empty = self.close(Subset::EMPTY);
        let f1 = FlagOutcome::check(c_empty.is_empty(), || Witness::Set(c_empty));

        let f2 = FlagOutcome::first(
            elems().find(|&a| self.close(Subset::singleton(a).with(neg(a))) != top),
            Witness::Element,
        );

        let f3 = FlagOutcome::first(elems().find(|&a| c1[a] != c1[neg(neg(a))]), Witness::Element);

        let pairs = || elems().flat_map(|b| elems().map(move |a| (a, b)));
        let below = |a: usize, b: usize| c1[b].contains(a) && c1[b] != top;
        let f4 =
            FlagOutcome::first(pairs().find(|&(a, b)| below(a, b) && !c1[a].contains(b)), |(a, b)| Witness::Pair(a, b));
        let f5 = FlagOutcome::first(pairs().find(|&(a, b)| below(a, b) && !c1[neg(a)].contains(neg(b))), |(a, b)| {
            Witness::Pair(a, b)
        });

        let mut f6_witness = None;
        let mut f7_witness = None;
        for b in Subset::all(alg.size()) {
            let cb = self.close(b);
            if cb == top {
                if f7_witness.is_none() && !b.iter().any(|x| b.iter().any(|y| c1[x] == c1[neg(y)])) {
                    f7_witness = Some(b);
                }
            } else if f6_witness.is_none() {
                if let Some(a) = cb.iter().find(|&a| !b.iter().any(|x| c1[x].contains(a))) {
                    f6_witness = Some((b, a));
                }
            }
            if f6_witness.is_some() && f7_witness.is_some() {
                break;
            }
        }
        let f6 = FlagOutcome::first(f6_witness, |(b, a)| Witness::SetElement(b, a));
        let f7 = FlagOutcome::first(f7_witness, Witness::Set);

        let flags = [f1, f2, f3, f4, f5, f6, f7];
        let tarski = self.tarski_congruence();
        Ok(GMatrixReport {
            full: flags.iter().all(|f| f.holds),
            flags,
            reduced: tarski.is_identity(),
            tarski,
            frege: self.frege_relation(),
        })
    }

    /// Quotients by the Tarski congruence and compares the projected family
    /// with the filters of the quotient algebra.
    pub fn reduction(&self, cap: usize) -> Result<Reduction, GMatrixError> {
        check_cap(&self.algebra, cap)?;
        let tarski = self.tarski_congruence();
        let (quotient, projection) = self.algebra.quotient(&tarski)?;
        let family: BTreeSet<Subset> = self.family.iter().map(|s| s.iter().map(|a| projection[a]).collect()).collect();
        let filters: BTreeSet<Subset> = matrix::all_filters(&quotient, cap)?.into_iter().collect();
        Ok(Reduction {
            missing: filters.difference(&family).copied().collect(),
            extra: family.difference(&filters).copied().collect(),
            family: family.into_iter().collect(),
            quotient,
            projection,
        })
    }

    /// Fullness via the reduction.
    pub fn is_full_by_reduction(&self, cap: usize) -> Result<bool, GMatrixError> {
        Ok(self.reduction(cap)?.is_full())
    }
}

/// Data attached to a failed condition.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Witness {
    Set(Subset),
    Element(usize),
    Pair(usize, usize),
    SetElement(Subset, usize),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Set(s) => write!(f, "B={s}"),
            Witness::Element(a) => write!(f, "a={a}"),
            Witness::Pair(a, b) => write!(f, "a={a} b={b}"),
            Witness::SetElement(s, a) => write!(f, "B={s} a={a}"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FlagOutcome {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl FlagOutcome {
    fn check(holds: bool, witness: impl FnOnce() -> Witness) -> Self {
        FlagOutcome { holds, witness: (!holds).then(witness) }
    }

    fn first<T>(found: Option<T>, witness: impl FnOnce(T) -> Witness) -> Self {
        FlagOutcome { holds: found.is_none(), witness: found.map(witness) }
    }
}

/// Result of [`ClosureSystem::check_full`]; `flags[k]` is condition F(k+1).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GMatrixReport {
    pub flags: [FlagOutcome; 7],
    pub tarski: Partition,
    pub frege: Partition,
    pub reduced: bool,
    pub full: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Reduction {
    pub quotient: UnaryAlgebra,
    pub projection: Vec<usize>,
    /// Projected members, sorted.
    pub family: Vec<Subset>,
    /// Filters of the quotient absent from the projected family.
    pub missing: Vec<Subset>,
    /// Projected members that are not filters of the quotient.
    pub extra: Vec<Subset>,
}

impl Reduction {
    pub fn is_full(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

/// `⟨A, all filters of A⟩`.
pub fn basic_full_gmodel(alg: &UnaryAlgebra, cap: usize) -> Result<ClosureSystem, GMatrixError> {
    let filters = matrix::all_filters(alg, cap)?;
    ClosureSystem::new(alg.clone(), filters)
}

/// Intrinsic variety: `x ≈ ¬¬x`.
pub fn in_v(alg: &UnaryAlgebra) -> bool {
    alg.satisfies_double_negation()
}

/// `x ≈ ¬¬x` and at most one fixpoint of `¬`.
pub fn in_alg(alg: &UnaryAlgebra) -> bool {
    alg.satisfies_double_negation() && alg.satisfies_unique_fixpoint()
}

/// Membership in `Alg` decided through the basic full g-model: its Frege
/// relation is the identity.
pub fn in_alg_by_frege(alg: &UnaryAlgebra, cap: usize) -> Result<bool, GMatrixError> {
    Ok(basic_full_gmodel(alg, cap)?.frege_relation().is_identity())
}

/// Whether `h` is a strict homomorphism: `a ∈ C₁(X) ⟺ h(a) ∈ C₂(h(X))` for
/// every `X` and `a`. The map must be a homomorphism of the algebras.
pub fn strict_hom_check(
    source: &ClosureSystem,
    target: &ClosureSystem,
    h: &[usize],
    cap: usize,
) -> Result<bool, GMatrixError> {
    let (a1, a2) = (&source.algebra, &target.algebra);
    if h.len() != a1.size() {
        return Err(GMatrixError::MapSize { found: h.len(), expected: a1.size() });
    }
    if let Some((element, &image)) = h.iter().enumerate().find(|(_, &b)| b >= a2.size()) {
        return Err(GMatrixError::MapOutOfRange { element, image, size: a2.size() });
    }
    if let Some(element) = a1.elements().find(|&a| h[a1.neg(a)] != a2.neg(h[a])) {
        return Err(GMatrixError::NotHomomorphism { element });
    }
    check_cap(a1, cap)?;
    Ok(Subset::all(a1.size()).all(|x| {
        let left = source.close(x);
        let right = target.close(x.iter().map(|a| h[a]).collect());
        a1.elements().all(|a| left.contains(a) == right.contains(h[a]))
    }))
}

/// `a ~ b` iff `Fig(F ∪ {a}) = Fig(F ∪ {b})`. `F` must be a filter.
pub fn suszko_like_relation(alg: &UnaryAlgebra, f: Subset) -> Result<Partition, GMatrixError> {
    if !matrix::is_filter(alg, f)? {
        return Err(ModelError::NotFilter { subset: f }.into());
    }
    let generated: Vec<Subset> =
        alg.elements().map(|a| matrix::generate_filter(alg, f.with(a))).collect::<Result<_, _>>()?;
    Ok(Partition::from_key(alg.size(), |a| generated[a]))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FregeanProbe {
    /// The relation above is contained in the Leibniz congruence of `F`.
    pub holds: bool,
    /// Least pair related by the first but not by the second.
    pub witness: Option<(usize, usize)>,
}

pub fn fully_fregean_probe(alg: &UnaryAlgebra, f: Subset) -> Result<FregeanProbe, GMatrixError> {
    let lambda = suszko_like_relation(alg, f)?;
    let omega = matrix::leibniz_congruence(alg, f)?;
    let witness = lambda.pairs().find(|&(a, b)| !omega.related(a, b));
    Ok(FregeanProbe { holds: witness.is_none(), witness })
}

/// Every closure system on the algebra's carrier, sorted by family.
/// Candidate families range over all sets of proper subsets, so this is
/// limited to carriers of at most [`MAX_ENUMERATED_CARRIER`] elements.
pub fn enumerate_closure_systems(alg: &UnaryAlgebra) -> Result<Vec<ClosureSystem>, GMatrixError> {
    let m = alg.size();
    if m > MAX_ENUMERATED_CARRIER {
        return Err(ModelError::CapExceeded { size: m, cap: MAX_ENUMERATED_CARRIER }.into());
    }
    let top = Subset::full(m);
    let proper: Vec<Subset> = Subset::all(m).filter(|&s| s != top).collect();
    let mut out = Vec::new();
    for choice in 0u64..1 << proper.len() {
        let members: Vec<Subset> =
            (0..proper.len()).filter(|k| choice >> k & 1 == 1).map(|k| proper[k]).chain(std::iter::once(top)).collect();
        let closed = members.iter().all(|s| members.iter().all(|t| members.contains(&s.intersection(*t))));
        if closed {
            let mut family = members;
            family.sort();
            out.push(ClosureSystem { algebra: alg.clone(), family });
        }
    }
    out.sort_by(|a, b| a.family.cmp(&b.family));
    Ok(out)
}
