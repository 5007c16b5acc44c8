//! Noncommutative Lagrange inversion in exact arithmetic.
//!
//! The crate computes the noncommutative Lagrange series
//! `g = 1 + Σ S_n g^n` in the algebra of noncommutative symmetric
//! functions, its expansions on the S, Λ, R, g and f bases, its coproduct
//! and antipode, and the combinatorics that interprets the coefficients:
//! nondecreasing parking functions, biprofiles, noncrossing partitions,
//! binary trees, minimal factorizations of long cycles and the incidence
//! algebra of the noncrossing partition lattices.

pub mod algebra;
pub mod composition;
pub mod error;
pub mod factorization;
pub mod hopf;
pub mod incidence;
pub mod json;
pub mod lagrange;
pub mod noncrossing;
pub mod parking;
pub mod permutation;
pub mod verify;

pub use composition::Composition;
pub use error::{Error, Result};
