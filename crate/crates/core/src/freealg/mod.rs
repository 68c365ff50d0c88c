//! The free associative algebra over GF(p): words, sparse polynomials,
//! grading, substitution and commutators.

mod poly;
mod text;
mod word;

pub use poly::{commutator, left_normed_commutator, left_normed_commutator_of, Polynomial, Substitution};
pub use text::{format, parse};
pub(crate) use text::Cursor;
pub use word::{MultiDegree, Word};
