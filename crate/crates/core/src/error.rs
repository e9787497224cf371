//! Error type shared by every layer of the crate.

use thiserror::Error;

use crate::scalar::Field;

/// Everything that can go wrong while building or combining algebra values.
///
/// Operations on values from different fields or of different arities never
/// coerce silently; they fail with the corresponding variant here.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },

    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("unknown generator `{name}`")]
    UnknownGenerator { name: String },

    #[error("generator `{name}` is already declared with degree {existing}")]
    DuplicateGenerator { name: String, existing: u32 },

    #[error("invalid generator name `{name}`: names match [a-zA-Z][a-zA-Z0-9]*")]
    InvalidGeneratorName { name: String },

    #[error("generator degree {degree} exceeds the supported maximum {max}")]
    DegreeTooLarge { degree: u32, max: u32 },

    #[error("position {position} is out of range 1..={arity}")]
    PositionOutOfRange { position: usize, arity: usize },

    #[error("positions must differ, both are {position}")]
    EqualPositions { position: usize },

    #[error("arity {arity} is too small, need at least {min}")]
    ArityTooSmall { arity: usize, min: usize },

    #[error("{value} is not prime")]
    NotPrime { value: u64 },

    #[error("prime modulus {value} exceeds the supported bound 2^16")]
    PrimeTooLarge { value: u64 },

    #[error("division by zero over {field}")]
    DivisionByZero { field: Field },

    #[error("an ideal needs at least one generator")]
    EmptyIdeal,

    #[error("ideal generator `{got}` is not a single tensor word")]
    NotMonomial { got: String },

    #[error("run length {k} is out of range 2..={arity}")]
    RunLengthOutOfRange { k: usize, arity: usize },

    #[error("claim `{claim}` requires a distinct prefix generator")]
    MissingPrefixGenerator { claim: String },

    #[error("claim `{claim}` takes no prefix generator")]
    UnexpectedPrefixGenerator { claim: String },

    #[error("the prefix generator must differ from the chain generator `{name}`")]
    PrefixEqualsChain { name: String },

    #[error("invalid field code `{code}`: expected q, f2, f3, or fp:P")]
    InvalidFieldCode { code: String },

    #[error("invalid context spec: {detail}")]
    InvalidContextSpec { detail: String },
}
