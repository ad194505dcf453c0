//! From knot diagrams to reduced Z[G] complexes.

mod cube;
mod pd;
mod special;

use thiserror::Error;

pub use cube::{build_reduced_complex, resolve, CubeOptions, ResolutionState, DEFAULT_CAP};
pub use pd::{parse_braid, parse_pd, BasePoint, PDCode};
pub use special::{
    closed_surface_value, s_invariant, specialized_homology, unreduced_from_reduced, GradedPid, IntComplex,
    SpecializedTable,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TqftError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("diagram has {0} components; only knots are supported")]
    MultiComponent(usize),
    #[error("base point edge {0} does not occur in the diagram")]
    BadBasePoint(i64),
    #[error("generator cap exceeded: {needed} live generators, cap {cap}")]
    CapExceeded { needed: usize, cap: usize },
    #[error("expected exactly one pawn over F[G], found {0}")]
    PawnCount(usize),
}
