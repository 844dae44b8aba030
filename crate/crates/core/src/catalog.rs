//! Literal Seifert matrices for the worked example.
//!
//! `V1` is the block sum of the framing-2, framing-2 and framing-4 twisted
//! doubles. `V2` is obtained from it by reattaching the first band.

use crate::algebra::IntMatrix;
use crate::seifert::{validate, SeifertMatrix};

pub const V1_ROWS: [[i64; 6]; 6] = [
    [-1, 1, 0, 0, 0, 0],
    [0, 2, 0, 0, 0, 0],
    [0, 0, -1, 1, 0, 0],
    [0, 0, 0, 2, 0, 0],
    [0, 0, 0, 0, -1, 1],
    [0, 0, 0, 0, 0, 4],
];

pub const V2_ROWS: [[i64; 6]; 6] = [
    [3, 0, 1, 0, 0, 4],
    [-1, 2, 0, 0, 0, 0],
    [1, 0, -1, 1, 0, 0],
    [0, 0, 0, 2, 0, 0],
    [0, 0, 0, 0, -1, 1],
    [4, 0, 0, 0, 0, 4],
];

/// `V2` with entry (2, 4) changed from 0 to 1: still a Seifert matrix, but no
/// longer a band move away from `V1`.
pub const TAMPERED_ROWS: [[i64; 6]; 6] = [
    [3, 0, 1, 0, 0, 4],
    [-1, 2, 0, 1, 0, 0],
    [1, 0, -1, 1, 0, 0],
    [0, 0, 0, 2, 0, 0],
    [0, 0, 0, 0, -1, 1],
    [4, 0, 0, 0, 0, 4],
];

fn literal(rows: [[i64; 6]; 6]) -> IntMatrix {
    IntMatrix::from_rows(rows).expect("square literal")
}

pub fn v1_matrix() -> IntMatrix {
    literal(V1_ROWS)
}

pub fn v2_matrix() -> IntMatrix {
    literal(V2_ROWS)
}

pub fn v1() -> SeifertMatrix {
    validate(v1_matrix()).expect("V1 is a Seifert matrix")
}

pub fn v2() -> SeifertMatrix {
    validate(v2_matrix()).expect("V2 is a Seifert matrix")
}

pub fn tampered() -> SeifertMatrix {
    validate(literal(TAMPERED_ROWS)).expect("tampered matrix is a Seifert matrix")
}
