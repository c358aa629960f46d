use thiserror::Error;

use crate::linear::Violation;
use crate::star::StarViolation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("endpoint {vertex} out of range for graph on {n} vertices")]
    EndpointOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("malformed edge list: {0}")]
    Parse(String),
    #[error("graph is not locally linear: {0}")]
    NotLocallyLinear(Violation),
    #[error("graph has fewer than two vertices")]
    TooSmall,
    #[error("unsupported induced cycle length {0} (expected 4, 5 or 6)")]
    UnsupportedLength(usize),
    #[error("cycle bijection failed: {0}")]
    BijectionFailure(String),
    #[error("vertex {vertex} has odd degree {degree}")]
    OddDegree { vertex: usize, degree: usize },
    #[error("identity check failed: {0}")]
    IdentityFailure(String),
    #[error("neighbourhood of vertex {0} is not a disjoint union of cliques")]
    NotClusterNeighborhood(usize),
    #[error("neighbourhood of vertex {vertex} splits into {parts} cliques (at most 3 allowed)")]
    TooManyParts { vertex: usize, parts: usize },
    #[error("not a valid triangle graph: {0}")]
    InvalidStar(StarViolation),
    #[error("gluing contradiction: {0}")]
    GluingContradiction(String),
    #[error("invalid generator parameter: {0}")]
    InvalidParam(String),
    #[error("rejection sampling exhausted after {0} attempts")]
    RetryExhausted(usize),
    #[error("counterexample search exhausted its bound")]
    SearchExhausted,
}

impl Error {
    /// Stable variant name, used by the command line front end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::EndpointOutOfRange { .. } => "EndpointOutOfRange",
            Error::SelfLoop(_) => "SelfLoop",
            Error::Parse(_) => "Parse",
            Error::NotLocallyLinear(_) => "NotLocallyLinear",
            Error::TooSmall => "TooSmall",
            Error::UnsupportedLength(_) => "UnsupportedLength",
            Error::BijectionFailure(_) => "BijectionFailure",
            Error::OddDegree { .. } => "OddDegree",
            Error::IdentityFailure(_) => "IdentityFailure",
            Error::NotClusterNeighborhood(_) => "NotClusterNeighborhood",
            Error::TooManyParts { .. } => "TooManyParts",
            Error::InvalidStar(_) => "InvalidStar",
            Error::GluingContradiction(_) => "GluingContradiction",
            Error::InvalidParam(_) => "InvalidParam",
            Error::RetryExhausted(_) => "RetryExhausted",
            Error::SearchExhausted => "SearchExhausted",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
