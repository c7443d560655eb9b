use thiserror::Error;

/// Errors surfaced by the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("point at or beyond the sphere at infinity (|p| = {norm})")]
    AtInfinity { norm: f64 },

    #[error("spectrum is not a real saddle: {0}")]
    NotRealSaddle(String),

    #[error("empty or degenerate search box")]
    EmptySearchBox,

    #[error("infinity field vanishes identically (alpha = 0)")]
    DegenerateInfinityField,

    #[error("first integral undefined at this point: {0}")]
    FirstIntegralUndefined(String),

    #[error("stereographic projection pole (y' = c_y - R)")]
    ProjectionPole,

    #[error("ill-posed boundary value problem: {0}")]
    IllPosed(String),

    #[error("Newton iteration did not converge: residual {residual:.3e} after {iterations} iterations")]
    NewtonDiverged { residual: f64, iterations: usize },

    #[error("singular linearization (condition estimate {cond:.3e})")]
    SingularLinearization { cond: f64 },

    #[error("eigenvalue collision in end space: {0}")]
    EndSpaceDegenerate(String),

    #[error("continuation step collapsed: {0}")]
    StepCollapse(String),

    #[error("equilibrium not found near the supplied hint")]
    EquilibriumNotFound,

    #[error("serialization: {0}")]
    Serialize(String),

    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
