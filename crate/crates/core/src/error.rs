use thiserror::Error;

use crate::properties::PropertyReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("cover relation is not an order: `{0}` and `{1}` lie on a cycle")]
    CycleDetected(String, String),
    #[error("relation is not a partial order: {0}")]
    NotAnOrder(String),
    #[error("a poset needs at least one element")]
    EmptyCarrier,
    #[error("carrier of {0} elements exceeds the capacity of {max}", max = crate::set::CAPACITY)]
    CapacityExceeded(usize),
    #[error("element index {0} is outside the carrier")]
    ElementOutOfRange(usize),
    #[error("poset is not bounded (needs both a least and a greatest element)")]
    NotBounded,
    #[error("this variant needs a unary operation")]
    MissingUnaryOp,
    #[error("unary operation has {got} entries, carrier has {expected}")]
    UnaryArity { expected: usize, got: usize },
    #[error("relative pseudocomplement of `{0}` with respect to `{1}` does not exist")]
    NoPseudocomplement(String, String),
    #[error("premises of the {variant} construction are violated: {failed}")]
    PremisesViolated {
        variant: &'static str,
        failed: String,
        report: Box<PropertyReport>,
    },
    #[error("size {0} is outside the supported range 1..={max}", max = crate::enumerate::MAX_ENUMERATION_SIZE)]
    SizeBoundExceeded(usize),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unary map has no entry for `{0}`")]
    PartialUnaryMap(String),
    #[error("tables of size {table} do not match a poset of size {poset}")]
    TableShape { table: usize, poset: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
