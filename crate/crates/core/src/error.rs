use thiserror::Error;

/// Errors raised by the library.
///
/// The `Internal*`, `Asymmetry`, `NonRegular` and `NonIntegral` variants are
/// bug traps: they fire only when two independent computations of the same
/// quantity disagree.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient vertex count m = {m} is too small (need m >= 2)")]
    MTooSmall { m: usize },

    #[error("ambient vertex count m = {m} exceeds the supported cap {cap}")]
    MTooLarge { m: usize, cap: usize },

    #[error("the full simplex on [{m}] is not allowed")]
    FullSimplex { m: usize },

    #[error("vertex {vertex} is outside 1..={m}")]
    VertexRange { vertex: i64, m: usize },

    #[error("{face} is not a face of the complex")]
    NotAFace { face: String },

    #[error("facet cone {facet} is not unimodular (determinant {det})")]
    NonRegular { facet: String, det: String },

    #[error("internal mismatch in {what}: {detail}")]
    InternalMismatch { what: &'static str, detail: String },

    #[error("coefficients of {class} are not symmetric at |S| = {size}")]
    Asymmetry { class: String, size: usize },

    #[error("{what} requires {requirement}, got m = {m}")]
    Dimension { what: &'static str, requirement: &'static str, m: usize },

    #[error("expression is not homogeneous of degree {expected}")]
    Degree { expected: usize },

    #[error("non-integral coefficient while reducing [X_{index}] at m = {m}")]
    NonIntegral { index: usize, m: usize },

    #[error("complexes live on different vertex sets: m = {left} and m = {right}")]
    MismatchedM { left: usize, right: usize },

    #[error("invalid partition: {0}")]
    Partition(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
