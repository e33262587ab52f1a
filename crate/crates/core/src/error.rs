use std::fmt;

use thiserror::Error;

/// Why a place descriptor was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlaceDefect {
    GenImageNotRoot,
    UniformizerNotInPrime,
    RamificationUnsupported,
    /// The uniformizer lies in the prime but its norm has order >= 2.
    NotUniformizer,
}

impl fmt::Display for PlaceDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PlaceDefect::GenImageNotRoot => "GEN_IMAGE_NOT_ROOT",
            PlaceDefect::UniformizerNotInPrime => "UNIFORMIZER_NOT_IN_PRIME",
            PlaceDefect::RamificationUnsupported => "RAMIFICATION_UNSUPPORTED",
            PlaceDefect::NotUniformizer => "NOT_UNIFORMIZER",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different extensions")]
    DescriptorMismatch,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix dimensions do not agree")]
    DimensionMismatch,
    #[error("invalid place: {0}")]
    InvalidPlace(PlaceDefect),
    #[error("valuation of zero is undefined")]
    ZeroInput,
    #[error("matrix does not square to the identity")]
    NotOrderTwo,
    #[error("invalid involution: {0}")]
    InvalidSpec(String),
    #[error("coefficient {0} is not 3-integral")]
    Not3Integral(String),
    #[error("polynomial degree exceeds the oracle bound {0}")]
    DegreeOverflow(usize),
    #[error("element is not invertible")]
    NotInvertible,
    #[error("reduced norm vanishes")]
    ZeroNorm,
    #[error("certificate inputs are not applicable: {0}")]
    Inapplicable(String),
    #[error("undefined scenario: {0}")]
    UndefinedCase(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
