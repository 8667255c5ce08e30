use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("numerical breakdown: {0}")]
    NumericalBreakdown(String),

    #[error("dimension {requested} too large (maximum {max})")]
    DimensionTooLarge { requested: usize, max: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("projection is unbounded in direction theta = {theta_deg} deg")]
    ProjectionUnbounded { theta_deg: f64 },

    #[error("polytope is empty")]
    EmptyPolytope,

    #[error("no junction found in ({lb_deg}, {ub_deg}] deg")]
    NoJunctionFound { lb_deg: f64, ub_deg: f64 },

    #[error("more than {max} vertices emitted")]
    VertexBudgetExceeded { max: usize },

    #[error("{count} candidate bases exceed the limit of {limit}")]
    TooManyBases { count: u128, limit: u128 },

    #[error("no basic feasible point: polytope is unbounded or empty")]
    UnboundedOrEmpty,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
