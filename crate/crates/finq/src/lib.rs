//! Exact arithmetic for finite permutation groups and their representations.
//!
//! The crate is organised bottom-up:
//!
//! * [`cyclo`] — rationals of arbitrary precision and cyclotomic numbers in
//!   canonical (conductor-minimal) form, including exact square roots of
//!   integers.
//! * [`perm`] — permutations in cycle notation, group generation by
//!   breadth-first closure, coset actions.
//! * [`classalg`] — conjugacy classes, class-algebra structure constants and
//!   character tables computed by the modular eigenvector method.
//! * [`rep`] — matrices over the cyclotomics, permutation representations and
//!   their decomposition into irreducible invariant subspaces.
//! * [`born`] — quadratic and linear invariants of natural-number state
//!   vectors and the associated transition probabilities.
//! * [`mix`] — 3x3 mixing matrices, moduli-squared tables and pattern tests.

pub mod born;
pub mod classalg;
pub mod cyclo;
pub mod mix;
pub mod perm;
pub mod rep;

use thiserror::Error;

/// Crate-wide error type. The variants map onto the distinct failure
/// categories surfaced by the command-line interface.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed text, out-of-range argument, or domain violation in input.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// Group closure exceeded the configured element cap.
    #[error("group order cap of {cap} exceeded")]
    CapExceeded { cap: usize },
    /// Matrix or vector shapes do not agree.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    /// A quantity that must be exactly rational turned out not to be.
    #[error("value is not rational: {0}")]
    NotRational(String),
    /// An internal consistency check failed; indicates a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
