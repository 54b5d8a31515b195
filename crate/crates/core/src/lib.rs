//! Exact invariants of the projective symplectic groups PSp4(q), q = 2^f > 2.
//!
//! The modules under [`sympl`] give the conjugacy classes of PSp4(q) and the
//! number of elements of each order in exact arithmetic; [`primegraph`] builds
//! the prime graph from the spectrum. A brute-force enumerator over GF(2^f) cross-checks the closed
//! forms at small q, and [`characterize`] decides from a group order and a set
//! of same-order counts whether a group must be PSp4(q).

pub mod arith;
pub mod characterize;
pub mod cli;
pub mod error;
pub mod gf2;
pub mod oracle;
pub mod primegraph;
pub mod selftest;
pub mod sympl;

pub use error::{Error, Result};
