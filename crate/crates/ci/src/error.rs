use thiserror::Error;

#[derive(Debug, Error)]
pub enum CiError {
    #[error("invalid statement: {0}")]
    InvalidStatement(String),
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("statement {statement} is not homogeneous for the separator {separator:?}")]
    NotHomogeneous { statement: String, separator: Vec<usize> },
    #[error("separator vertices {0} and {1} are not adjacent")]
    NotClique(usize, usize),
    #[error("edge {0}-{1} bypasses the separator")]
    NotSeparating(usize, usize),
    #[error("{what} has {size} elements, above the limit {limit}")]
    TooLarge { what: &'static str, size: usize, limit: usize },
    #[error(transparent)]
    Decomp(#[from] decomp::DecompError),
    #[error(transparent)]
    Hier(#[from] hierarchical::HierError),
    #[error(transparent)]
    Lattice(#[from] lattice_core::LatticeError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CiError {
    pub fn is_resource(&self) -> bool {
        match self {
            CiError::TooLarge { .. } => true,
            CiError::Decomp(e) => e.is_resource(),
            CiError::Hier(e) => e.is_resource(),
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, CiError>;
