use lattice_core::LatticeError;
use markov_engine::MarkovError;
use tfp::TfpError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HierError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Markov(#[from] MarkovError),
    #[error(transparent)]
    Tfp(#[from] TfpError),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("invalid levels: {0}")]
    InvalidLevels(String),
    #[error("invalid split: {0}")]
    InvalidSplit(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("graph is not series-parallel with top {top} and bottom {bottom}")]
    NotSeriesParallel { top: usize, bottom: usize },
    #[error("{what}: size {size} exceeds the limit {limit}")]
    TooLarge { what: &'static str, size: usize, limit: usize },
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("malformed input: {0}")]
    Json(#[from] serde_json::Error),
}

impl HierError {
    pub fn is_resource(&self) -> bool {
        match self {
            HierError::TooLarge { .. } => true,
            HierError::Lattice(LatticeError::FiberTooLarge { .. }) => true,
            HierError::Markov(e) => e.is_resource(),
            HierError::Tfp(e) => e.is_resource(),
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, HierError>;
