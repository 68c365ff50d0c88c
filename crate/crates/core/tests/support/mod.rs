pub mod agreement;
pub mod naive_span;
