use thiserror::Error;

/// Errors produced by the reliability toolkit.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A state diagram violates one of its structural invariants.
    #[error("invalid state diagram: {0}")]
    InvalidDiagram(String),

    /// The chain has no transient state.
    #[error("nothing to analyze: the chain has no transient state")]
    NothingToAnalyze,

    /// `I - Q` is singular: some transient state never reaches absorption.
    #[error("infinite MTTF: absorption is not certain from the initial state")]
    InfiniteMttf,

    /// A parameter is outside its admissible range.
    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: String,
        value: f64,
        reason: String,
    },

    /// A numeric input is outside the domain of a formula.
    #[error("domain error: {0}")]
    Domain(String),

    /// Text input (diagram, scenario, waveform) could not be parsed.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A scenario is missing a key required by the requested computation.
    #[error("missing scenario key `{0}`")]
    MissingKey(String),

    /// A scenario contains a key that is not part of the schema.
    #[error("unknown scenario key `{0}`")]
    UnknownKey(String),

    /// Every Monte Carlo trial hit the simulation cutoff.
    #[error("cutoff too small: all {0} trials were censored")]
    AllCensored(u64),

    /// A sweep grid point failed; wraps the underlying error.
    #[error("sweep grid point {index} (value {value}): {source}")]
    Sweep {
        index: usize,
        value: f64,
        #[source]
        source: Box<Error>,
    },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn param(name: impl Into<String>, value: f64, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name: name.into(),
            value,
            reason: reason.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Checks that `value` is finite and `>= 0`.
pub(crate) fn non_negative(name: &str, value: f64) -> Result<f64> {
    if value.is_finite() && value >= 0.0 {
        Ok(value)
    } else {
        Err(Error::param(name, value, "must be finite and non-negative"))
    }
}

/// Checks that `value` is finite and `> 0`.
pub(crate) fn positive(name: &str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::param(
            name,
            value,
            "must be finite and strictly positive",
        ))
    }
}

/// Checks that `value` is a probability in `[0, 1]`.
pub(crate) fn probability(name: &str, value: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(Error::param(name, value, "must lie in [0, 1]"))
    }
}
