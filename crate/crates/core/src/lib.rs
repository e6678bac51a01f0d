//! Retractions on the Weyl groups of classical type.
//!
//! Elements are signed permutations in one-line window notation. The crate
//! provides three independent ways of retracting a group element onto a
//! subset `M`:
//!
//! * the greedy prefix retraction driven by the letter order
//!   `1 < 2 < ... < n < n̄ < ... < 2̄ < 1̄` ([`retraction::algebraic_retract`]),
//! * the retraction onto the unique `≤^u`-minimal element of a Coxeter matroid
//!   ([`retraction::matroid_retract`]),
//! * the limit fixed point of a one-parameter subgroup acting on a torus orbit
//!   closure in the type-A flag variety ([`orbit::limit_point`]).
//!
//! Supporting machinery covers Bruhat order, exact rational linear algebra, a
//! small exact simplex kernel, matroid polytopes and the maximal cones of
//! torus orbit fans.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod error;
pub mod fan;
pub mod geometry;
pub mod lp;
pub mod matroid;
pub mod orbit;
pub mod retraction;
pub mod weyl;

pub use error::{Result, WeylError};
pub use geometry::{Rational, RationalMatrix};
pub use retraction::{RetractionTable, SubsetM};
pub use weyl::{ExtendedIndex, Factor, GroupDescriptor, SignedPermutation, WeylType};
