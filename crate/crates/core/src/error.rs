use thiserror::Error;

use crate::pants_params::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{name} must be finite, got {value}")]
    NonFinite { name: String, value: f64 },

    #[error("{name} must be non-negative, got {value}")]
    Negative { name: String, value: f64 },

    #[error("parameters violate: {}", join_codes(.0))]
    Invalid(Vec<Violation>),

    #[error("degenerate pair of pants: {0}")]
    DegeneratePants(String),

    #[error("sample spacing must be positive and finite, got {0}")]
    InvalidSpacing(f64),

    #[error("sample spacing {spacing} exceeds the smallest face dimension {limit}")]
    SpacingTooCoarse { spacing: f64, limit: f64 },

    #[error("boundary indices must be distinct and in 1..=3, got {0} and {1}")]
    BoundaryIndex(usize, usize),

    #[error("metric graph is disconnected: {0}")]
    Disconnected(String),

    #[error("structures have different combinatorial types: {0}")]
    TypeMismatch(String),

    #[error("point is not in the parameter set: {}", join_codes(.0))]
    NotMember(Vec<Violation>),

    #[error("{name} must lie in {range}, got {value}")]
    OutOfRange {
        name: &'static str,
        range: &'static str,
        value: f64,
    },

    #[error("invalid surface: {0}")]
    Surface(String),

    #[error("invalid document: {0}")]
    Document(String),

    #[error("invalid gluing: {0}")]
    Gluing(String),
}

fn join_codes(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| v.code())
        .collect::<Vec<_>>()
        .join(", ")
}
