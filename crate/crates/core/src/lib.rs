//! Jet schemes, tangency tests and blow-up resolution for algebraic foliations over Q.
//!
//! All arithmetic is exact. Polynomials live in a shared [`algebra::VarContext`];
//! ideals are handled through reduced Groebner bases.
//!
//! Run any example with: `cargo run --example <name>`.

pub mod algebra;
pub mod blowup;
pub mod classify;
pub mod cli;
pub mod error;
pub mod foliation;
pub mod groebner;
pub mod jets;
pub mod resolve;
pub mod tangency;

pub use error::{Error, Result};
