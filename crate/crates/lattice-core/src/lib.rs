//! Integer linear algebra, graded variables, fibers and fiber graphs.

pub mod config;
pub mod error;
pub mod fiber;
pub mod grading;
pub mod io;
pub mod matrix;
pub mod moves;
pub mod vars;

pub use config::{check_homogeneous, kernel_basis, Homogeneity, VectorConfiguration};
pub use error::{LatticeError, Result};
pub use fiber::{
    components_from_edges, connected_components, enumerate_fiber, enumerate_fiber_with_cap, fiber_edges,
    project_graph, project_point, Fiber, FiberEnumerator, FiberGraph, ProjectionGraph, DEFAULT_FIBER_CAP,
};
pub use grading::Grading;
pub use matrix::IntMatrix;
pub use moves::{Move, MoveSet};
pub use vars::{GradedVariableSet, Label};
