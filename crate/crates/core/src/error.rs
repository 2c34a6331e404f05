use thiserror::Error;

/// Errors raised by the geometric kernel and shape constructors.
///
/// Every predicate in this crate is exact, so errors are reserved for
/// genuinely malformed inputs; there are no tolerance failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    /// A segment was given two equal endpoints. A point is not a line segment.
    #[error("zero-length segment at {0}")]
    DegenerateSegment(String),
    /// A line equation with a = b = 0 has no solution set that is a line.
    #[error("invalid line: coefficients a and b are both zero")]
    InvalidLine,
    /// Two equal lines have no unique intersection point.
    #[error("identical lines passed to intersection")]
    IdenticalLines,
    /// The matrix is singular or is not a similarity (rotation/reflection
    /// composed with uniform scale and translation).
    #[error("invalid transform: {0}")]
    InvalidTransform(&'static str),
    /// A rational literal could not be parsed.
    #[error("malformed rational literal {0:?}")]
    MalformedRational(String),
    /// A rational with denominator zero.
    #[error("rational with zero denominator")]
    ZeroDenominator,
}
