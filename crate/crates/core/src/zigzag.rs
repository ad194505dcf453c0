//! Rational tangles: zigzag graphs, zigzag complexes over the two-object
//! category, their closures, and certificates for the lambda distance.

mod category;
mod certify;
mod complex;
mod graph;
mod pd;
mod rational;

pub use category::{Mor, Obj, TangleComplex, TangleMap};
pub use certify::{edge_homotopy, fg_certificate, lambda_distance_rational, FGCertificate, LambdaDistance};
pub use complex::{closure, closure_map, graph_to_complex};
pub use graph::{
    connectivity_parity, ends_parity, parity_lemma_holds, zz, EndsParity, Parity, VertexType, ZEdge, ZigzagGraph,
};
pub use pd::two_bridge_pd;
pub use rational::Rational;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZigzagError {
    #[error("cannot parse rational {0:?}")]
    Parse(String),
    #[error("{0} is not a positive rational")]
    NotPositive(Rational),
    #[error("{0} needs odd numerator and denominator")]
    NotOddOdd(Rational),
    #[error("{x} and {y} have different connectivity")]
    ParityMismatch { x: Rational, y: Rational },
    #[error("closure of {0} is a link, not a knot")]
    NotAKnot(Rational),
    #[error("no homotopy for edge {0}")]
    NoHomotopy(usize),
}
