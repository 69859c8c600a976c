use lattice_core::LatticeError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MarkovError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("candidate move #{index} is not in the kernel of the configuration")]
    NotInKernel { index: usize },
    #[error("completion budget exhausted: more than {limit} {what}")]
    Budget { what: &'static str, limit: usize },
}

impl MarkovError {
    /// True for cap and budget failures, as opposed to bad input.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            MarkovError::Budget { .. } | MarkovError::Lattice(LatticeError::FiberTooLarge { .. })
        )
    }
}

pub type Result<T> = std::result::Result<T, MarkovError>;
