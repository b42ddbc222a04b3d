use thiserror::Error;

/// Domain errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation is undefined on the empty set")]
    EmptySet,
    #[error("duplicate element {0} in set")]
    DuplicateElement(String),
    #[error("cardinality must be at least 1")]
    ZeroCardinality,
    #[error("{0} is not in the image of the map")]
    NotInImage(String),
    #[error("set {set} violates the key's ground ({ground})")]
    GroundViolation { set: String, ground: &'static str },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("column {0} holds infinitely many sets")]
    InfiniteColumn(String),
    #[error("enumeration exceeded the search bound {0}")]
    BoundExceeded(u64),
    #[error("input size {size} exceeds the enumeration limit {limit}")]
    SizeLimit { size: usize, limit: usize },
    #[error("empty sampling window")]
    EmptyRange,
    #[error("parse error: {0}")]
    Parse(String),
}
