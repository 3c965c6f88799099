//! Marked poset polytopes with exact arithmetic.
//!
//! A *marked poset* is a finite poset together with a subset `A` of marked
//! elements (containing every minimal and maximal element) and an
//! order-monotone nonnegative integer marking on `A`. Two lattice polytopes
//! live over the unmarked coordinates: the marked *order* polytope (values
//! monotone along the order, pinned between marked bounds) and the marked
//! *chain* polytope (nonnegative values whose sums along chains with unmarked
//! interior are bounded by marking differences).
//!
//! The crate provides:
//!
//! * [`poset`] — representation, validation, order queries, saturated chains,
//!   reduced posets;
//! * [`regularize`] — rewriting any marked poset into the regular normal form
//!   (injective marking, no redundant covers) with a provenance trace;
//! * [`polytope`] — H-representations, facet-count formulas, star-relation
//!   detection;
//! * [`oracle`] — brute-force exact-rational vertex enumeration, facet
//!   irredundancy and f-vectors at desk scale, used as ground truth;
//! * [`lattice`] — lattice-point enumeration, dilation counts, Minkowski sums
//!   of point sets;
//! * [`decompose`] — peeling a marking into 0/1 layers and connected
//!   components, indecomposability tests and their brute-force counterpart;
//! * [`equivalence`] — the explicit unimodular map between the two polytopes
//!   for star-free regular posets, with verification;
//! * [`families`] — generators for the classical families (Gelfand-Tsetlin,
//!   symplectic, Demazure, star).
//!
//! All arithmetic is exact (`i64` coefficients, arbitrary-precision rationals
//! in the oracle); no floating point anywhere. Every value is immutable after
//! construction and all operations are pure functions, so instances may be
//! shared freely across threads.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod decompose;
pub mod equivalence;
pub mod error;
pub mod families;
pub mod lattice;
mod linalg;
pub mod oracle;
pub mod polytope;
pub mod poset;
pub mod regularize;

pub use error::{Error, Violation};
pub use lattice::LatticePointSet;
pub use polytope::{HRep, StarWitness};
pub use poset::{Marking, MarkedPoset, PosetData, SubPoset};
pub use regularize::RegularizeOutcome;
