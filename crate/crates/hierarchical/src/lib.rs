//! Hierarchical log-linear models: marginal configurations, splits along
//! separators, closed-form bases and width bounds for graph models.

pub mod bipyramid;
pub mod closed;
pub mod complex;
pub mod error;
pub mod graph;
pub mod io;
pub mod model;
pub mod sp;
pub mod split;
pub mod width;

pub use bipyramid::{bipyramid, bipyramid_basis, BipyramidBasis};
pub use closed::{cone_basis, simplex_boundary_move};
pub use complex::SimplicialComplex;
pub use error::{HierError, Result};
pub use graph::{
    cycle_decomposition, has_k23_minor, has_k4_minor, is_cycle_decomposition, is_ring_graph, outerplanar_and_slim,
    ring_structure, Block, MarkovGraph, OuterplanarReport, MINOR_SEARCH_LIMIT,
};
pub use io::{parse_complex, parse_graph, ComplexSpec, GraphSpec};
pub use model::{hier_codim, model_matrix, CellIndex, HierModel};
pub use sp::{recognize, sp_basis, SpBasis, SpStep};
pub use split::{split, Split};
pub use width::{width, width_bound, WidthBound};
