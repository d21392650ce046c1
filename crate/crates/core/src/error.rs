use num_bigint::BigUint;
use num_rational::BigRational;
use thiserror::Error;

use crate::graph::{Label, NodeId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("({a}, {b}) are not relatively prime")]
    NotCoprime { a: u64, b: u64 },

    #[error("sequence provides {available} terms, {requested} requested")]
    NotEnoughTerms { requested: usize, available: usize },

    #[error("expansion needs {required} vertices, limit is {limit}")]
    ExpansionLimit { required: BigUint, limit: u64 },

    #[error("condensed graph at step {step} has {nodes} nodes, limit is {limit}")]
    NodeLimit {
        step: u32,
        nodes: usize,
        limit: usize,
    },

    #[error("unknown vertex {0}")]
    UnknownVertex(usize),

    #[error("malformed graph: {0}")]
    MalformedGraph(String),

    #[error("step {step}: node {node} (label {label}) would gain {value} children per vertex")]
    NonIntegralGrowth {
        step: u32,
        node: NodeId,
        label: Label,
        value: BigRational,
    },

    #[error("step {step}: no rule for paths of length {length} (demand from known rules is {known_demand})")]
    RuleMissing {
        step: u32,
        length: u32,
        known_demand: BigRational,
    },

    #[error("predicted entry K[{length}][{label}] = {value} is not an integer")]
    NonIntegralEntry {
        length: u32,
        label: u32,
        value: BigRational,
    },

    #[error("graph {requested} not built (family ends at {built})")]
    OutOfRange { requested: u32, built: u32 },

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
