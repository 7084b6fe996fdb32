//! Combinatorics of first extension groups over the symmetric group.
//!
//! The crate computes, purely combinatorially, the dimensions and graded
//! degrees of first extension spaces from simple objects to Verma modules
//! (regular and singular blocks of category O) and to (proper) standard
//! objects of S-subcategories, in type A. Everything is driven by the
//! arithmetic of `S_n`: the Bruhat order and its base of bigrassmannian
//! permutations, Robinson–Schensted cells, and parabolic coset
//! combinatorics.
//!
//! With the default `parallel` feature the exhaustive sweeps (tables, the
//! self-test battery) run on rayon; disabling it falls back to sequential
//! loops with identical results.

pub mod base;
pub mod cells;
pub mod error;
pub mod ext_o;
pub mod ext_s;
pub mod parabolic;
pub mod perm;
pub mod selftest;
mod sweep;
pub mod table;

pub use error::{Error, Result};
pub use perm::{bruhat_leq, bruhat_leq_oracle, Permutation, SimpleReflection};
