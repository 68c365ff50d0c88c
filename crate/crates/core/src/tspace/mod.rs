//! Slice-wise membership in T-spaces: enumerate spanning generators of a
//! family inside one multidegree, reduce them into an echelon basis over
//! GF(p), and test the target against it.

mod basis;
mod enumerate;
mod family;
mod membership;

pub use basis::{Reduction, SliceColumns, SpanBasis};
pub use enumerate::{enumerate_words, split_multidegree};
pub use family::{
    family_generators, for_each_generator, partitions, polarize_by_substitution, Factor, GeneratorFamily,
    GeneratorSpec, Pattern, Semantics, FRESH_BASE,
};
pub use membership::{
    membership, span_basis, span_dimension, Budget, CertificateTerm, MembershipVerdict, Status, BATCH_SIZE,
};
