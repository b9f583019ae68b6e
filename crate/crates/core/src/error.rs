//! Error type shared by every construction and validator.

use thiserror::Error;

/// Failures raised by validation and construction.
///
/// Every law violation carries the labels of a witnessing tuple so a caller
/// can reproduce the failure by hand.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("leq is not a partial order: {law} fails at {witness:?}")]
    NotAPartialOrder { law: &'static str, witness: Vec<String> },
    #[error("no least upper bound for {subset:?}")]
    MissingJoin { subset: Vec<String> },
    #[error("tensor is not associative at {witness:?}")]
    NotAssociative { witness: Vec<String> },
    #[error("tensor does not distribute over joins at {witness:?}")]
    NotJoinDistributive { witness: Vec<String> },
    #[error("unit law fails at {witness:?}")]
    UnitLawFails { witness: Vec<String> },
    #[error("action does not preserve joins at {witness:?}")]
    ActionNotJoinPreserving { witness: Vec<String> },
    #[error("action is not associative at {witness:?}")]
    ActionNotAssociative { witness: Vec<String> },
    #[error("unit does not act as identity at {witness:?}")]
    UnitActionFails { witness: Vec<String> },
    #[error("F is not a module homomorphism: {reason} at {witness:?}")]
    FNotModuleHom { reason: &'static str, witness: Vec<String> },
    #[error("objects live over different quantales")]
    QuantaleMismatch,
    #[error("index {index} out of range for {what} of size {size}")]
    BadElementIndex { what: &'static str, index: usize, size: usize },
    #[error("table has shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("construction needs a commutative base quantale")]
    NonCommutativeBase,
    #[error("{what} has {size} elements, above the cap of {cap}")]
    SizeLimitExceeded { what: &'static str, size: u128, cap: u128 },
    #[error("operator is not a prenucleus: {law} fails at {witness:?}")]
    NotAPrenucleus { law: &'static str, witness: Vec<String> },
    #[error("operator is not a nucleus: {law} fails at {witness:?}")]
    NotANucleus { law: &'static str, witness: Vec<String> },
    #[error("map does not identify the pair {witness:?}")]
    GDoesNotRespectX { witness: Vec<String> },
    #[error("partition is not a congruence: {law} fails at {witness:?}")]
    NotACongruence { law: &'static str, witness: Vec<String> },
    #[error("composition mismatch: {0}")]
    CompositionMismatch(String),
    #[error("internal invariant broken: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
