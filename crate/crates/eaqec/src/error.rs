use thiserror::Error;

/// Errors reported by fallible operations across the crate.
///
/// Universe-size mismatches between operands are programming errors and
/// panic instead; everything a caller can trigger with runtime input is
/// routed through this type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph has {vertices} vertices; state-vector operations support at most {limit}")]
    GraphTooLarge { vertices: usize, limit: usize },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid distance {distance}: must satisfy 1 <= d <= {noisy} (noisy qubit count)")]
    InvalidDistance { distance: usize, noisy: usize },
    #[error("search infeasible: {0}")]
    SearchInfeasible(String),
    #[error("coding clique is not a group; this operation requires group structure")]
    NotAGroup,
    #[error("invalid stabilizer generators: {0}")]
    InvalidGenerators(String),
    #[error("inconsistent stabilizer rows: {0}")]
    InconsistentRows(String),
    #[error("solution space too large: {0}")]
    SolutionSpaceTooLarge(String),
    #[error("invalid noise model: {0}")]
    InvalidNoise(String),
    #[error("invalid range: {0}")]
    InvalidRange(String),
    #[error("enumeration bound exceeded: {0}")]
    EnumerationBound(String),
    #[error("invalid record: {0}")]
    InvalidRecord(String),
    #[error("selector length {got} does not match generator count {expected}")]
    LengthMismatch { got: usize, expected: usize },
    #[error("construction failed: {0}")]
    Construction(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
