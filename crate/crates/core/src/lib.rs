//! Universal Khovanov complexes over Z[G] for knots and rational tangles.
//!
//! [`zring`] holds the coefficient ring, [`chain`] the complexes and their
//! exact linear algebra, [`tqft`] builds reduced complexes from diagrams,
//! [`pieces`] splits complexes into catalogue pieces and certifies bounds on
//! the lambda invariant, and [`zigzag`] handles rational tangles.

pub mod chain;
pub mod pieces;
pub mod tqft;
pub mod zigzag;
pub mod zring;

pub use chain::{FreeComplex, Grading};
pub use zring::{CoefficientSpec, GMonomial, GPolynomial, Int};
