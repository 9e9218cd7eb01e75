use thiserror::Error;

/// Errors raised across the toolkit.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported parameter range: {0}")]
    UnsupportedRange(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("ill-posed neutral term: {0}")]
    IllPosedNeutral(String),

    #[error("unsupported regime: {0}")]
    UnsupportedRegime(String),

    #[error("no root: {0}")]
    NoRoot(String),

    #[error("degenerate denominator: {0}")]
    DegenerateDenominator(String),

    #[error("singular exponent: {0}")]
    SingularExponent(String),

    #[error("inapplicable criterion: {0}")]
    InapplicableCriterion(String),

    #[error("fit domain error: {0}")]
    FitDomain(String),

    #[error("format error: {0}")]
    Format(String),

    #[error("solver diverged after {iterations} iterations (existence criterion value {theta_exist:.6e})")]
    Divergence {
        iterations: usize,
        residual_history: Vec<f64>,
        theta_exist: f64,
    },

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Config(format!("line {} column {}: {}", e.line(), e.column(), e))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
