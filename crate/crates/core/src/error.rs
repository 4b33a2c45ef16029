use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unknown root system type {0}")]
    UnknownType(String),
    #[error("rank {rank} out of range for type {ty}")]
    RankOutOfRange { ty: String, rank: usize },
    #[error("not a root system: {0}")]
    NotARootSystem(String),
    #[error("Weyl group of order {order} exceeds the enumeration guard {limit}")]
    EnumerationLimitExceeded { order: u128, limit: u128 },
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("no matrix model for {0}")]
    ModelMissing(String),
    #[error("table and model disagree for {0}")]
    TableModelMismatch(String),
    #[error("element is not in p")]
    NotInP,
    #[error("element is not regular")]
    NotRegular,
    #[error("no regular element found while sampling {0}")]
    SamplingFailed(String),
    #[error("unrecognized component in descendant: {0}")]
    UnrecognizedComponent(String),
    #[error("odd characteristic coefficient nonzero at degree {0}")]
    OddCoefficientNonzero(usize),
    #[error("degree of D is {d}, below 2g = {two_g}")]
    DegreeTooSmall { d: i64, two_g: i64 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;
