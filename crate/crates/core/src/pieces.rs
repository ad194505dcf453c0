//! Piece catalogue, certified decompositions, G-torsion orders and lambda bounds.

mod catalogue;
mod decompose;
mod identities;
mod lambda;
mod torsion;

pub use catalogue::{dual_staircase, staircase, staircase_maps, PieceKind};
pub use decompose::{decompose, decompose_tensor, Decomposition, Summand};
pub use identities::{verify_identity, Identity, IdentityReport};
pub use lambda::{default_kmax, lambda_bounds, lambda_zero_upper, LambdaBounds, LambdaCertificate, ZeroBound};
pub use torsion::{torsion_order, u_g, TorsionOrder};
