//! Seifert matrices and the operations used to build and relate them.
//!
//! A [`SeifertMatrix`] has even dimension `2g` and satisfies
//! `det(V - Vᵗ) = 1`. Twisted doubles come from [`double_seifert`], connected
//! sums are block sums ([`direct_sum`]), and [`is_band_move`] decides whether
//! two matrices differ by cutting one band and reattaching it.

use core::fmt;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::algebra::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeifertError {
    #[error("Seifert matrix must have even dimension, got {0}")]
    OddDimension(usize),
    #[error("det(V - V^t) = {0}, expected 1")]
    NotUnimodularIntersection(BigInt),
    #[error("band index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("band move compares matrices of dimension {before} and {after}")]
    DimensionMismatch { before: usize, after: usize },
}

/// Validated Seifert matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeifertMatrix(IntMatrix);

impl SeifertMatrix {
    /// The unknot's empty Seifert matrix.
    pub fn empty() -> Self {
        Self(IntMatrix::empty())
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    /// Genus of the surface carrying the matrix.
    pub fn genus(&self) -> usize {
        self.0.dim() / 2
    }
}

impl TryFrom<IntMatrix> for SeifertMatrix {
    type Error = SeifertError;

    fn try_from(m: IntMatrix) -> Result<Self, SeifertError> {
        validate(m)
    }
}

impl fmt::Display for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Checks even dimension and `det(V - Vᵗ) = 1`.
pub fn validate(m: IntMatrix) -> Result<SeifertMatrix, SeifertError> {
    if !m.dim().is_multiple_of(2) {
        return Err(SeifertError::OddDimension(m.dim()));
    }
    let d = m.antisymmetrize().det();
    if !d.is_one() {
        return Err(SeifertError::NotUnimodularIntersection(d));
    }
    Ok(SeifertMatrix(m))
}

/// Seifert matrix `[[-1, 1], [0, framing]]` of the positive `framing`-twisted
/// double of any knot.
pub fn double_seifert(framing: impl Into<BigInt>) -> SeifertMatrix {
    let m = IntMatrix::from_rows([[BigInt::from(-1), BigInt::one()], [BigInt::from(0), framing.into()]])
        .expect("2x2 literal");
    SeifertMatrix(m)
}

/// Block sum, the Seifert matrix of the connected sum.
pub fn direct_sum(a: &SeifertMatrix, b: &SeifertMatrix) -> SeifertMatrix {
    // det(V - Vᵗ) is multiplicative over blocks, so validity is preserved.
    SeifertMatrix(a.0.block_sum(&b.0))
}

/// Claim that `after` is obtained from `before` by reattaching band
/// `band_index` (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandMoveClaim {
    pub before: SeifertMatrix,
    pub after: SeifertMatrix,
    pub band_index: usize,
}

impl BandMoveClaim {
    pub fn new(before: SeifertMatrix, after: SeifertMatrix, band_index: usize) -> Self {
        Self { before, after, band_index }
    }
}

/// True iff the two matrices agree outside row and column `band_index` and
/// have the same intersection form `V - Vᵗ`.
///
/// The diagonal entry of the band may change; reattaching a band can add
/// twists to it.
pub fn is_band_move(claim: &BandMoveClaim) -> Result<bool, SeifertError> {
    let (before, after) = (claim.before.matrix(), claim.after.matrix());
    let dim = before.dim();
    if after.dim() != dim {
        return Err(SeifertError::DimensionMismatch { before: dim, after: after.dim() });
    }
    if claim.band_index == 0 || claim.band_index > dim {
        return Err(SeifertError::IndexOutOfRange { index: claim.band_index, dim });
    }
    let k = claim.band_index - 1;
    let outside_same = (0..dim)
        .filter(|&i| i != k)
        .all(|i| (0..dim).filter(|&j| j != k).all(|j| before.get(i, j) == after.get(i, j)));
    Ok(outside_same && before.antisymmetrize() == after.antisymmetrize())
}
