use core::fmt;

/// Errors raised by the numerical core.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A quantity that must be strictly positive and finite was not.
    NotPositive { name: &'static str, value: f64 },
    /// A quantity that must be non-negative and finite was not.
    Negative { name: &'static str, value: f64 },
    /// A value is outside the supported numerical range.
    OutOfRange { name: &'static str, value: f64 },
    /// Requested Bessel order exceeds the configured maximum.
    OrderTooLarge { order: usize, max: usize },
    /// An atom model must contain at least one oscillator.
    EmptyAtomModel,
    /// Distance grid for a sweep is not strictly increasing.
    UnorderedGrid { index: usize },
    /// Evaluation configuration is out of range.
    InvalidConfig(&'static str),
    /// Continued fraction for the Bessel ratio did not converge.
    NoConvergence { order: usize, x: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPositive { name, value } => {
                write!(f, "{name} must be positive (got {value})")
            }
            Error::Negative { name, value } => {
                write!(f, "{name} must be non-negative (got {value})")
            }
            Error::OutOfRange { name, value } => {
                write!(f, "{name} is outside the supported range (got {value})")
            }
            Error::OrderTooLarge { order, max } => {
                write!(f, "Bessel order {order} exceeds the maximum supported order {max}")
            }
            Error::EmptyAtomModel => f.write_str("atom model has no oscillators"),
            Error::UnorderedGrid { index } => {
                write!(f, "distance grid must be strictly increasing and positive (entry {index})")
            }
            Error::InvalidConfig(msg) => write!(f, "invalid evaluation config: {msg}"),
            Error::NoConvergence { order, x } => {
                write!(f, "Bessel ratio continued fraction did not converge (l = {order}, x = {x})")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn ensure_positive(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::NotPositive { name, value })
    }
}

pub(crate) fn ensure_non_negative(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value >= 0.0 {
        Ok(value)
    } else {
        Err(Error::Negative { name, value })
    }
}
