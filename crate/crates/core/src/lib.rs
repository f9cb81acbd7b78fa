//! Digraph classes defined by small forbidden induced subdigraphs, the
//! constructive acyclic-coloring algorithms for them, a brute-force
//! dichromatic-number oracle that certifies every answer, and seeded
//! generators feeding the test suites.
//!
//! - [`digraph`]: the kernel — simple digraphs with stable integer ids,
//!   neighborhoods, induced subdigraphs, identification, acyclicity, strong
//!   components and shortest dipaths.
//! - [`patterns`]: induced-pattern search, class membership, the functional
//!   out-digraph and out-module machinery.
//! - [`colorings`]: the coloring algorithms, each with an explicit palette
//!   bound and checkable side conditions.
//! - [`oracle`]: exact dichromatic number, coloring validity, naive pattern
//!   counting.
//! - [`generators`]: named constructions and seeded random class members.

pub mod colorings;
pub mod digraph;
mod error;
pub mod generators;
pub mod oracle;
pub mod patterns;

pub use error::{Error, Result};
