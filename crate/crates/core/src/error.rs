use thiserror::Error;

/// Errors shared by every layer of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid universe: {reason}")]
    InvalidUniverse { reason: String },
    #[error("EmptyBlock: block at position {index} is empty")]
    EmptyBlock { index: usize },
    #[error("NotACover: union of blocks misses {missing}")]
    NotACover { missing: String },
    #[error("DuplicateBlock: block {block} appears at positions {first} and {second}")]
    DuplicateBlock {
        block: String,
        first: usize,
        second: usize,
    },
    #[error("UnknownElement: {name} is not an element of the universe")]
    UnknownElement { name: String },
    #[error("UniverseMismatch: subset belongs to a different universe")]
    UniverseMismatch,
    #[error("BadIndex: block index {index} out of range, covering has {len} blocks")]
    BadIndex { index: usize, len: usize },
    #[error("NotAMember: {set} is not a member of the family")]
    NotAMember { set: String },
    #[error("SizeLimit: size {size} exceeds the cap of {cap} for this operation")]
    SizeLimit { size: usize, cap: usize },
    #[error("NotUnary: the covering is not unary")]
    NotUnary,
    #[error("UnknownPredicate: no registered predicate named {name}")]
    UnknownPredicate { name: String },
}
