use thiserror::Error;

use crate::regions::RegionId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficients must satisfy a*b != 0")]
    DegenerateCoefficients,
    #[error("initial values (v0, v1) must not both be zero")]
    ZeroInitialValues,
    #[error("h-type scale c must be nonzero")]
    ZeroScale,
    #[error("operation requires real characteristic roots (a^2 - 4b >= 0)")]
    ComplexRoots,
    #[error("operation requires v0 * v1 != 0")]
    ZeroInitialTerm,
    #[error("operation requires an h-type specification (a_-1 = 0)")]
    NotHType,
    #[error("quadratic elements have different radicands")]
    RadicandMismatch,
    #[error("radicand must be non-negative")]
    NegativeRadicand,
    #[error("division by zero")]
    DivisionByZero,
    #[error("region {0} is not defined in the {1} plane")]
    WrongPlane(RegionId, &'static str),
    #[error("bounding box must have positive width and height")]
    DegenerateBox,
    #[error("raster resolution must be at least 2")]
    Resolution,
    #[error("the Riccati map is undefined at a zero initial state")]
    ZeroInitialState,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}
