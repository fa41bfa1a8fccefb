//! Exact arithmetic for the face algebra of the braid arrangement.
//!
//! The crate builds, from scratch and over exact rationals:
//!
//! - the index combinatorics (partitions, compositions, set partitions,
//!   permutations) in [`combinatorics`];
//! - the monoid of ordered set partitions under blockwise intersection,
//!   its support map, the symmetric-group action, and the sparse face
//!   algebra in [`faces`];
//! - symmetric-group irreducible characters by border-strip recursion in
//!   [`characters`];
//! - symmetric functions in the power-sum basis with Schur/homogeneous
//!   conversions, plethysm, and higher Lie characters in [`symfunc`];
//! - Lyndon words, Duval factorization, necklaces, and the bijections
//!   between partition-bead and tuple-bead primitive necklaces in
//!   [`lyndon`];
//! - an equivariant complete family of orthogonal idempotents indexed by
//!   set partitions, with runtime verification of all of its defining
//!   properties, in [`idempotents`];
//! - brute-force module analysis (projector traces, characters, isotypic
//!   dimensions, composition multiplicities) in [`repanalysis`];
//! - the bivariate generating function over Lyndon words whose
//!   coefficients reproduce those module characters, in [`genfunc`].
//!
//! With the default `parallel` feature the compute-heavy sweeps run on
//! rayon; sequential fallbacks (`*_seq`) are always compiled and are the
//! baseline of the criterion bench suite.

pub mod combinatorics;
pub mod faces;
pub mod characters;
pub mod symfunc;
pub mod lyndon;
pub mod idempotents;
pub mod repanalysis;
pub mod genfunc;
pub mod jsonio;

mod par;

pub use combinatorics::{
    compositions_rearranging_to, conjugacy_classes, partitions_of, set_partitions_of,
    Composition, ConjugacyClass, Partition, Permutation, SetPartition,
};
pub use faces::{enumerate_faces, Face, FaceAlgebraElement};
pub use idempotents::IdempotentFamily;
pub use repanalysis::ProjectedSpace;
pub use symfunc::SymFunc;

/// Error type for fallible library entry points.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A verification pass found a violated structural property.
    #[error("verification failed: {0}")]
    Verification(String),
    /// An internal consistency cross-check failed (two independent
    /// computations of the same quantity disagreed).
    #[error("consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
