//! Exact arithmetic substrate: Laurent polynomials over ℤ, square integer
//! matrices, determinants of polynomial matrices and signatures of symmetric
//! integer matrices.

mod laurent;
mod matrix;
mod polydet;
mod signature;

pub use laurent::{normalize_alexander, AlgebraError, LaurentPoly};
pub use matrix::IntMatrix;
pub use polydet::{poly_matrix_det, PolyMatrix};
pub use signature::{is_perfect_square, symmetric_signature, Signature};
