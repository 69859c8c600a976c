//! Conditional independence models, their ideals and toric fiber products.

pub mod error;
pub mod fiber;
pub mod generators;
pub mod graph;
pub mod inference;
pub mod statement;

pub use error::{CiError, Result};
pub use fiber::{ci_tfp, generator_identity, generators_homogeneous, oriented, s_homogeneous, GeneratorIdentity, SeparatorRing};
pub use generators::{ci_generators, model_generators, model_polynomials, quadrics, CIGenerators, CIQuadric, Cells, Marginal};
pub use graph::{
    clique_split_tree, global_markov, graphical_split, prime_by_splitting, split_agreement, GraphicalSplit, PieceAgreement,
    PrimeVerdict, SplitTree,
};
pub use inference::{ci_inference_check, graded_containment, Inference, Relation, Rule};
pub use statement::{parse_model, write_model, CIModel, CIStatement};
