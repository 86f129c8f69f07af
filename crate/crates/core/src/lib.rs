//! Finite monoid-graded near-rings as validated operation tables, with an
//! exhaustive ideal engine, a family of graded-primality checkers behind a
//! runtime registry, quotient/product/homomorphism constructions, a built-in
//! corpus of examples, and a theorem-check harness over all of it.
//!
//! Carriers are capped at 64 elements so subsets fit one machine word; the
//! enumeration loops that dominate the interesting computations are plain
//! bit-mask arithmetic.

// operation tables are indexed by element all over; iterator rewrites of
// those loops obscure the algebra
#![allow(clippy::needless_range_loop)]

pub mod corpus;
pub mod grading;
pub mod harness;
pub mod hom;
pub mod ideals;
pub mod mask;
pub mod monoid;
pub mod near_ring;
pub mod primality;
pub mod product;
pub mod quotient;

#[cfg(test)]
pub(crate) mod testing;

pub use grading::{validate_grading, GradedNearRing, Grading, GradingError};
pub use ideals::{
    certify_ideal, enumerate_ideals, enumerate_normal_subgroups, enumerate_subgroups,
    ideal_generated_by, ideal_sum, is_ideal, is_normal_subgroup, set_power, set_product,
    EnumerationError, Ideal, IdealDefect, DEFAULT_ENUMERATION_BUDGET,
};
pub use mask::{SubsetMask, MAX_CARRIER};
pub use monoid::{validate_monoid, FiniteMonoid, MonoidError};
pub use near_ring::{validate_near_ring, FiniteNearRing, NearRingError, RingDiagnostic};
pub use primality::{
    checker_by_id, checkers, is_maximal_ideal, is_prime_ideal, power_descends, verify_witness,
    PrimalityChecker, PrimalityError, PrimalityReport, PrimalityWitness,
};
