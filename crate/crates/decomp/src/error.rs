use thiserror::Error;

#[derive(Debug, Error)]
pub enum DecompError {
    #[error(transparent)]
    Lattice(#[from] lattice_core::LatticeError),
    #[error(transparent)]
    Tfp(#[from] tfp::TfpError),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("invalid ideal: {0}")]
    InvalidIdeal(String),
    #[error("generator {generator} of component {component} is not homogeneous")]
    NotHomogeneous { component: usize, generator: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("{what} has {size} elements, above the limit {limit}")]
    TooLarge { what: &'static str, size: usize, limit: usize },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl DecompError {
    pub fn is_resource(&self) -> bool {
        matches!(self, DecompError::TooLarge { .. })
    }
}

pub type Result<T> = std::result::Result<T, DecompError>;
