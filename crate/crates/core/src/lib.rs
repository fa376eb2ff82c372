//! The negation fragment of classical propositional logic and its algebraic
//! semantics on finite structures.
//!
//! * [`formula`]: formulas `¬ⁿx`, parsing and rendering.
//! * [`hilbert`]: the three-rule Hilbert calculus, proof checking, entailment
//!   and proof synthesis.
//! * [`algebra`]: finite algebras with one unary operation.
//! * [`matrix`]: logical matrices, filters and the Leibniz congruence.
//! * [`gmatrix`]: closure systems, full g-models and the classes `V`, `Alg`.
//! * [`census`]: counts of small algebras by class.
//! * [`formats`]: text files for algebras, matrices and closure systems.

pub mod algebra;
pub mod census;
pub mod formats;
pub mod formula;
pub mod gmatrix;
pub mod hilbert;
pub mod matrix;
pub mod partition;
pub mod subset;

pub use algebra::{CanonicalCode, OrbitInfo, UnaryAlgebra};
pub use formula::{Formula, FormulaSet, Session};
pub use gmatrix::{ClosureSystem, GMatrixReport};
pub use hilbert::{Justification, Proof, ProofStep};
pub use matrix::Matrix;
pub use partition::Partition;
pub use subset::Subset;
