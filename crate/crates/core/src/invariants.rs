//! Classical invariants read off a Seifert matrix.
//!
//! Sign convention: the signature is that of `V + Vᵗ`, so the trefoil with
//! Seifert matrix `[[-1, 1], [0, -1]]` has signature `-2`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::algebra::{
    is_perfect_square, normalize_alexander, poly_matrix_det, symmetric_signature, LaurentPoly, PolyMatrix,
};
use crate::seifert::SeifertMatrix;

/// Two cheap necessary conditions for algebraic sliceness. Both being true
/// does not make a knot algebraically slice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SliceObstructions {
    pub signature_zero: bool,
    pub determinant_square: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub alexander: LaurentPoly,
    pub determinant: BigInt,
    pub signature: i64,
    pub arf: u8,
    pub genus: usize,
    pub alexander_one: bool,
    pub slice_obstructions: SliceObstructions,
}

impl InvariantReport {
    pub fn compute(v: &SeifertMatrix) -> Self {
        let alexander = alexander(v);
        let determinant = alexander.value_at_minus_one().abs();
        let signature = signature(v);
        Self {
            arf: arf_from_determinant(&determinant),
            genus: genus(v),
            alexander_one: alexander.is_one(),
            slice_obstructions: SliceObstructions {
                signature_zero: signature == 0,
                determinant_square: is_perfect_square(&determinant),
            },
            alexander,
            determinant,
            signature,
        }
    }
}

/// Raw `det(V - t·Vᵗ)`, before normalization.
pub fn alexander_raw(v: &SeifertMatrix) -> LaurentPoly {
    poly_matrix_det(&PolyMatrix::alexander_matrix(v.matrix()))
}

/// Canonical Alexander polynomial: nonnegative exponents, nonzero constant
/// term, value `+1` at `t = 1`.
pub fn alexander(v: &SeifertMatrix) -> LaurentPoly {
    // det(V - Vᵗ) = 1 makes the value at t = 1 equal to 1
    normalize_alexander(&alexander_raw(v)).expect("Seifert matrix has Δ(1) = ±1")
}

/// `|Δ(-1)|`, always odd.
pub fn knot_determinant(v: &SeifertMatrix) -> BigInt {
    alexander(v).value_at_minus_one().abs()
}

pub fn signature(v: &SeifertMatrix) -> i64 {
    symmetric_signature(&v.matrix().symmetrize()).expect("V + V^t is symmetric").signature
}

/// Arf invariant via `Δ(-1) ≡ ±1 (mod 8)`.
pub fn arf(v: &SeifertMatrix) -> u8 {
    arf_from_determinant(&knot_determinant(v))
}

fn arf_from_determinant(det: &BigInt) -> u8 {
    let r = det.mod_floor(&BigInt::from(8));
    if r == BigInt::from(1) || r == BigInt::from(7) {
        0
    } else {
        1
    }
}

pub fn genus(v: &SeifertMatrix) -> usize {
    v.genus()
}

pub fn is_alexander_one(v: &SeifertMatrix) -> bool {
    alexander(v).is_one()
}

pub fn slice_obstructions(v: &SeifertMatrix) -> SliceObstructions {
    SliceObstructions {
        signature_zero: signature(v) == 0,
        determinant_square: is_perfect_square(&knot_determinant(v)),
    }
}
