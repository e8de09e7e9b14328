//! Exact computer algebra for Schubert derivations on the exterior algebra
//! of `Z[X]`.
//!
//! The crate decides whether a tensor in `⋀^r` is decomposable by three
//! independent routes, generates the quadrics cutting out the Grassmann
//! cone in a bounded range, and checks the KP residue equation for
//! weight-truncated tau functions. All arithmetic is exact.

pub mod derivations;
pub mod determinant;
pub mod error;
pub mod exterior;
pub mod kp;
pub mod laurent;
pub mod partitions;
pub mod pluecker;
pub mod selftest;
pub mod symmetric;

pub use error::{Error, Result};
