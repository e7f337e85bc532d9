use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LppError {
    #[error("cover relation contains a cycle through `{0}`")]
    Cycle(String),
    #[error("Hasse diagram is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("poset has no elements")]
    EmptyPoset,
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("vertex index {0} out of range")]
    VertexOutOfRange(usize),
    #[error("negative weight at vertex {vertex}")]
    NegativeWeight { vertex: usize },
    #[error("passage times are not monotone at vertex {vertex}")]
    NonMonotone { vertex: usize },
    #[error("size guard exceeded: {what} is {count}, limit {limit}")]
    GuardExceeded {
        what: &'static str,
        count: usize,
        limit: usize,
    },
    #[error("not a maximal chain: {0}")]
    InvalidPath(String),
    #[error("not a linear extension: {0}")]
    InvalidExtension(String),
    #[error("not an antichain: {0}")]
    NotAntichain(String),
    #[error("not an extreme ray of the cone: {0}")]
    NotExtremeRay(String),
    #[error("paths must differ")]
    IdenticalPaths,
    #[error("disorder graph is disconnected")]
    DisconnectedDisorderGraph,
    #[error("weight vector is outside the cone")]
    OutsideCone,
    #[error("tied passage times at vertices {0} and {1}")]
    TiedPassageTimes(usize, usize),
    #[error("weight entry {vertex} outside [0, 1]")]
    OutOfUnitInterval { vertex: usize },
    #[error("nonpositive rate at index {0}")]
    NonPositiveRate(usize),
    #[error("normal is not part of the inequality system")]
    NormalNotInSystem,
    #[error("singular generator matrix")]
    Singular,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = LppError> = std::result::Result<T, E>;
