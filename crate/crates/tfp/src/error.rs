use lattice_core::LatticeError;
use markov_engine::MarkovError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TfpError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Markov(#[from] MarkovError),
    #[error("grading mismatch: {0}")]
    GradingMismatch(String),
    #[error("{side} side is not homogeneous: column {var} (class {class}, index {j}) does not map to its grading vector")]
    NotHomogeneous {
        side: &'static str,
        class: usize,
        j: usize,
        var: usize,
    },
    #[error("expected a codimension {expected} product, found codimension {found}")]
    Codimension { expected: usize, found: usize },
    #[error("move #{index} cannot be lifted: its monomials have different class contents")]
    Unalignable { index: usize },
    #[error("resource limit: more than {limit} {what}")]
    Budget { what: &'static str, limit: usize },
}

impl TfpError {
    pub fn is_resource(&self) -> bool {
        match self {
            TfpError::Budget { .. } | TfpError::Lattice(LatticeError::FiberTooLarge { .. }) => true,
            TfpError::Markov(e) => e.is_resource(),
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, TfpError>;
