use std::path::PathBuf;

use lattice_core::LatticeError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot access {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Markov(#[from] markov_engine::MarkovError),
    #[error(transparent)]
    Tfp(#[from] tfp::TfpError),
    #[error(transparent)]
    Hier(#[from] hierarchical::HierError),
    #[error(transparent)]
    Decomp(#[from] decomp::DecompError),
    #[error(transparent)]
    Ci(#[from] ci::CiError),
}

pub type Result<T> = std::result::Result<T, CliError>;

fn lattice_resource(e: &LatticeError) -> bool {
    matches!(e, LatticeError::FiberTooLarge { .. } | LatticeError::Overflow(_))
}

impl CliError {
    /// 2 for bad input, 3 when a cap or budget ran out.
    pub fn exit_code(&self) -> i32 {
        let resource = match self {
            CliError::Lattice(e) => lattice_resource(e),
            CliError::Markov(e) => e.is_resource(),
            CliError::Tfp(e) => e.is_resource(),
            CliError::Hier(e) => e.is_resource(),
            CliError::Decomp(decomp::DecompError::Tfp(e)) => e.is_resource(),
            CliError::Decomp(e) => e.is_resource(),
            CliError::Ci(e) => e.is_resource(),
            _ => false,
        };
        if resource {
            3
        } else {
            2
        }
    }
}
