use thiserror::Error;

use crate::hvector::HVector;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty h-vector")]
    Empty,
    #[error("h-vector must start with 1, found {0}")]
    BadLeadingEntry(i64),
    #[error("negative entry {value} at n={index}")]
    NegativeEntry { index: usize, value: i64 },
    #[error("zero entry at n={index} below the socle degree")]
    InteriorZero { index: usize },
    #[error("cannot parse h-vector {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("negative partial sum at n={index}")]
    NegativePartialSum { index: i64 },
    #[error("difference sequence does not sum to zero (total {total})")]
    NonTerminating { total: i64 },

    #[error("{0} is not C2-admissible")]
    NotC2Admissible(HVector),
    #[error("{0} is not G3-admissible")]
    NotG3Admissible(HVector),
    #[error("{0} is not symmetric")]
    NotSymmetric(HVector),
    #[error("first half of {h} has negative entry at n={index}")]
    NegativeFirstHalf { h: HVector, index: usize },

    #[error("residual is negative at n={index}")]
    NegativeResidual { index: i64 },
    #[error("residual scheme is empty")]
    EmptyResidual,
    #[error("residual {0:?} is not an h-vector")]
    InvalidResidual(Vec<i64>),
    #[error("biliaison chain broke at {h}: {reason}")]
    ChainInvalid { h: HVector, reason: String },

    #[error("{0} with s=1 is not the h-vector of a complete intersection of two plane curves")]
    BaseCaseParseFailure(HVector),
    #[error("invalid type parameters: {0}")]
    InvalidTypeParams(String),
    #[error("closed form inapplicable: {0}")]
    Inapplicable(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("precondition failed: {0}")]
    PreconditionFailure(String),
    #[error("linear system is special: degree {degree} < 2g-1 = {}", 2 * genus - 1)]
    SpecialLinearSystem { degree: i64, genus: i64 },

    #[error("no catalog partner for {n} general points")]
    NoPartnerAvailable { n: i64 },
    #[error("catalog data conflict for {h}: {detail}")]
    DataConflict { h: String, detail: String },
    #[error("table data: {0}")]
    Data(String),
}
