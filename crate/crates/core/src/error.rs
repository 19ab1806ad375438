use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("strict partition has a repeated part {0}")]
    NotStrict(u32),

    #[error("frobenius coordinates have unequal lengths ({alpha} arms, {beta} legs)")]
    FrobeniusLength { alpha: usize, beta: usize },

    #[error("double_of requires all parts >= 1")]
    ZeroPartInDouble,

    #[error("cannot parse polynomial: {0}")]
    PolyParse(String),

    #[error("exponential of a series with nonzero constant term")]
    NonzeroConstantTerm,

    #[error("exponential of a nonzero series needs a finite weight cutoff")]
    UnboundedExp,

    #[error("negative index ({0}, {1}) in Q matrix entry")]
    NegativeIndex(i64, i64),

    #[error("pfaffian of odd dimension {0}")]
    OddDimension(usize),

    #[error("matrix is not skew-symmetric at ({0}, {1})")]
    NotSkew(usize, usize),

    #[error("matrix is not square")]
    NotSquare,

    #[error("marking index {j} out of range for rank {rank}")]
    MarkingOutOfRange { j: u64, rank: usize },

    #[error("marking {0} is not a canonical representative")]
    NotCanonical(u64),

    #[error("marking {0} vanishes")]
    VanishingMarking(u64),

    #[error("symmetric pair has unequal coefficients: {0} vs {1}")]
    AsymmetricPair(String, String),

    #[error("fermionic word: {0}")]
    Word(String),

    #[error("vacuum expectation value carries an odd power of sqrt(2)")]
    OddSqrtTwo,

    #[error("expected a real value but got imaginary part {0}")]
    NonzeroImaginary(String),

    #[error("Wick hypothesis violated: {0}")]
    WickHypothesis(String),
}
