//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A board spec string (`stirling:<n>` or `psi:<a_n>,...,<a_1>`) did not parse.
    SpecParse(String),
    /// Face-level operations use 128-bit square sets; wider boards are rejected.
    BoardTooLarge { squares: u64, max: u64 },
    /// An explicit resource ceiling (face count, matrix size, vertex bound) was hit.
    ResourceLimit(String),
    /// The given square set is not a face of the complex at hand.
    NotAFace,
    /// The operation is defined only on staircase (Stirling) boards.
    NotStaircase,
    /// The placement does not lie in the top fiber of the diagonal map.
    NotInGamma,
    /// Blocks fail to be disjoint, nonempty, or to cover the ground set.
    InvalidPartition(String),
    /// Squares off the board or attacking each other.
    InvalidPlacement(String),
    /// The board does not satisfy the shedding-order hypotheses.
    HypothesesUnmet(String),
    /// No valid shedding order was found (should not happen for boards
    /// satisfying the hypotheses).
    CertificateNotFound(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SpecParse(msg) => write!(f, "board spec parse error: {msg}"),
            Error::BoardTooLarge { squares, max } => {
                write!(f, "board has {squares} squares; face enumeration supports at most {max}")
            }
            Error::ResourceLimit(msg) => write!(f, "resource limit exceeded: {msg}"),
            Error::NotAFace => write!(f, "square set is not a face of the complex"),
            Error::NotStaircase => write!(f, "operation requires a staircase board"),
            Error::NotInGamma => write!(f, "placement is not in the critical fiber"),
            Error::InvalidPartition(msg) => write!(f, "invalid set partition: {msg}"),
            Error::InvalidPlacement(msg) => write!(f, "invalid placement: {msg}"),
            Error::HypothesesUnmet(msg) => write!(f, "hypotheses unmet: {msg}"),
            Error::CertificateNotFound(msg) => write!(f, "no shedding certificate found: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
