//! Graded chain complexes of free shifted Z[G]-modules.

mod complex;
mod homology;
pub mod lattice;
mod maps;
mod reduce;

pub use complex::{direct_sum, dual, tensor, FreeComplex, Grading, Violation};
pub(crate) use homology::{diff_matrix, include};
pub use homology::{graded_basis, homology_at, GradedGroup, HomClass};
pub use maps::{solve_chain_map, solve_nullhomotopy, ChainMap, Infeasible, MapMode, NonMembership, NullHomotopy};
pub use reduce::{gaussian_eliminate, Reducer};
