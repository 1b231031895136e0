use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("node count {0} outside supported range 1..=32")]
    NodeCount(usize),
    #[error("node index {index} out of range for {n} nodes")]
    NodeIndex { index: usize, n: usize },
    #[error("loop at node {0}: simple graphs have no self-loops")]
    Loop(usize),
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("closed-walk count overflow at length {0}")]
    WalkOverflow(usize),
    #[error("series length {0} exceeds the supported maximum of 40")]
    SeriesLength(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{0} requires at least two nodes")]
    TooSmall(&'static str),
    #[error("Jacobi eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),
    #[error("eigensolver failure: {0}")]
    Eigen(String),
    #[error("eigenvector zero test disagrees: regular={regular}, float spread={spread:e}")]
    ModeDisagreement { regular: bool, spread: f64 },
    #[error("enumeration supports 1..=10 nodes, got {0}")]
    EnumerationRange(usize),
    #[error("empty graph stream")]
    EmptyStream,
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
