use thiserror::Error;

/// Errors raised by algebraic operations across the crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("mismatched contexts: {0}")]
    MismatchedContexts(String),
    #[error("unknown component index {index} (graph has {n_vertices} vertices)")]
    UnknownComponent { index: usize, n_vertices: usize },
    #[error("value {value} does not belong to monoid {monoid}")]
    ValueNotInMonoid { value: String, monoid: String },
    #[error("variety constraint violated: {0}")]
    VarietyViolation(String),
    #[error("permutation is not an automorphism of the index graph")]
    NotAnAutomorphism,
    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("monoid homomorphism laws fail: {0}")]
    LawlessHom(String),
    #[error("fold maps are incompatible with the index graph: {0}")]
    FoldIncompatible(String),
    #[error("operad profile mismatch: {0}")]
    ProfileMismatch(String),
    #[error("states come from different metric contexts: {0}")]
    MetricMismatch(String),
    #[error("graph violates the degree bound: vertex {vertex} has degree {degree} > {bound}")]
    DegreeBound {
        vertex: usize,
        degree: usize,
        bound: usize,
    },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid injection: {0}")]
    InvalidInjection(String),
    #[error("invalid metric space: {0}")]
    InvalidMetric(String),
    #[error("empty alphabet for free monoid")]
    EmptyAlphabet,
}

pub type Result<T> = std::result::Result<T, Error>;
