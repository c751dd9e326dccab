//! Exact-arithmetic computational Lie theory: classical root systems, Weyl
//! group combinatorics (inversion sets, dot action, stabilizer
//! factorizations), linear prime ideals of the symmetric algebra S(h) with a
//! strong-dominance density decision, the FCR classification of the
//! corresponding prime factors, and the dual-pair highest-weight
//! decompositions with independent closure oracles.
//!
//! Every scalar is an exact rational; no floating point is used anywhere.

mod error;
pub mod rat;

pub mod exactlin;
pub mod rootsys;
pub mod weyl;

pub mod ideals;

pub mod corpus;
pub mod fcr;
pub mod howe;

pub mod json;

pub use error::{Error, Result};
