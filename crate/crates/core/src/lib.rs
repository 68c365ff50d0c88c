//! Exact computation in the free associative algebra over GF(p): symmetric
//! polynomials, commutators, and slice-wise membership in T-spaces, with a
//! battery of checks reproducing the known identities and separations.

pub mod cli;
pub mod error;
pub mod expr;
pub mod freealg;
pub mod gfp;
pub mod suite;
pub mod symmetric;
pub mod tspace;

pub use error::{Error, Result};
