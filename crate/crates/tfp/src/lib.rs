//! Toric fiber products of vector configurations and their Markov bases.

pub mod assemble;
pub mod checks;
pub mod codim0;
pub mod combinat;
pub mod error;
pub mod glue;
pub mod product;

pub use assemble::{
    assemble, assemble_from_tilde, assemble_markov, AssembleOptions, Assembly, Justification, Provenance, SideBases,
};
pub use checks::{cpp_check, cpp_check_default, default_cpp_bound, slow_varying_check, CppReport, CppWitness, SlowVarying};
pub use codim0::{codim0_basis, lift_move, lift_moves, quad_moves};
pub use error::{Result, TfpError};
pub use glue::{compatibility, glue_pair, glue_sets, glue_sets_tagged, DEFAULT_GLUE_CAP};
pub use product::{product_config, tilde_extend, ProductConfiguration, Side, TildeProduct};
