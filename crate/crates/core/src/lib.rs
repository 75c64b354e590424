//! Exact machinery for coprime automorphism actions on small finite groups and
//! for graded Lie algebras acted on by Frobenius groups.

pub mod actions;
pub mod arith;
pub mod assoc;
pub mod error;
pub mod field;
pub mod graded;
pub mod group;
pub mod harness;
pub mod instances;
pub mod lie;
pub mod linalg;
pub mod report;
pub mod structure;

pub use error::{Error, Result};
