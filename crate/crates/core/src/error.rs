//! Error type shared by every operation in the crate.
//!
//! Variants are split along the boundary the callers care about: domain
//! failures (an input is well-formed but the requested computation is not
//! defined for it) versus malformed input (the data never named a valid
//! object in the first place). The CLI maps the former to exit code 1 and
//! the latter to exit code 2.

use std::fmt;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A polynomial did not factor into linear terms over the Gaussian
    /// rationals; carries a display form of the non-splitting cofactor.
    NonSplittingFactor { remainder: String },
    /// A rational function is not a member of the multiplicative group
    /// generated by the shift automorphism's coboundaries.
    NotInGSigma,
    /// Two graded objects were combined whose gradings do not line up.
    MismatchedShift,
    /// The closure search exhausted its round budget without stabilizing.
    WindowTooSmall { rounds: u32 },
    /// An element expected to act by a scalar failed to do so.
    NonScalarAction { operation: &'static str },
    /// Division by the zero rational function.
    ZeroDenominator,
    /// A structurally valid value that violates a documented precondition.
    InvalidParameter(String),
    /// Text that could not be parsed into the requested object.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonSplittingFactor { remainder } => {
                write!(f, "polynomial has a non-splitting factor: {remainder}")
            }
            Error::NotInGSigma => {
                write!(f, "rational function is not in the shift coboundary group")
            }
            Error::MismatchedShift => write!(f, "shift automorphisms do not match"),
            Error::WindowTooSmall { rounds } => {
                write!(f, "closure did not stabilize within {rounds} rounds; enlarge the window")
            }
            Error::NonScalarAction { operation } => {
                write!(f, "{operation} does not act by a scalar on this module")
            }
            Error::ZeroDenominator => write!(f, "division by zero rational function"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

/// Convenient alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
