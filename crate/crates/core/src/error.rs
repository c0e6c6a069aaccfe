use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parameter {index} is not finite")]
    NonFinite { index: usize },

    /// The input sits so close to a stratum boundary that the classification
    /// cannot be trusted on the floating-point backend.
    #[error("input lies within {margin:e} (relative) of a stratum boundary")]
    DegenerateInput { margin: f64 },

    #[error("potential is not compatible with the Killing tensor")]
    Incompatible,

    #[error("polynomial degree {degree} exceeds the bound {max}")]
    DegreeOverflow { degree: u32, max: u32 },

    /// A scalar multiple of the metric is fixed by the group and carries no web.
    #[error("a multiple of the metric does not define a coordinate web")]
    MetricMultiple,

    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),

    #[error("cannot parse rational number")]
    ParseRational,
}
