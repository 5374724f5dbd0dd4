use std::fmt;

/// Errors produced by the algebra operations.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Two operands belong to different number systems. There is no
    /// canonical embedding between the systems, so nothing is coerced.
    SystemMismatch { left: String, right: String },
    /// The divisor is zero or a zero divisor; its pseudonorm is carried
    /// so callers can report how close to the zero-divisor locus it was.
    ZeroDivisor { pseudonorm: f64 },
    /// A coefficient was NaN or infinite at construction.
    NonFiniteCoefficient { index: usize, value: f64 },
    /// A value outside {-1, 0, +1} was used as a base-system square.
    InvalidSquareSign(i8),
    /// The name does not denote one of the six built-in systems.
    UnknownSystem(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SystemMismatch { left, right } => {
                write!(f, "system mismatch: {left} vs {right}")
            }
            Error::ZeroDivisor { pseudonorm } => {
                write!(
                    f,
                    "division by zero or zero divisor (pseudonorm {pseudonorm})"
                )
            }
            Error::NonFiniteCoefficient { index, value } => {
                write!(f, "coefficient a{index} is not finite: {value}")
            }
            Error::InvalidSquareSign(v) => {
                write!(f, "invalid square sign {v}: must be -1, 0 or +1")
            }
            Error::UnknownSystem(name) => {
                write!(
                    f,
                    "unknown system {name:?}: expected one of H, AH, CD, WW, DD, WD"
                )
            }
        }
    }
}

impl std::error::Error for Error {}
