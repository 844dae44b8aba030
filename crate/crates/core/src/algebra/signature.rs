use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{AlgebraError, IntMatrix};

/// Inertia summary of a real symmetric matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature {
    /// Positive minus negative eigenvalue count.
    pub signature: i64,
    /// Dimension of the radical (multiplicity of eigenvalue 0).
    pub nullity: usize,
}

/// Signature and nullity by exact congruence reduction over ℚ.
///
/// A nonzero diagonal pivot contributes its sign and is eliminated
/// symmetrically. When the remaining diagonal is zero but some off-diagonal
/// entry `b` is not, the block `[[0, b], [b, 0]]` is a hyperbolic pair
/// contributing `+1` and `-1`, and it is eliminated by its Schur complement.
/// Whatever is left once every entry is zero is the radical.
pub fn symmetric_signature(s: &IntMatrix) -> Result<Signature, AlgebraError> {
    if let Some((row, col)) = s.first_asymmetry() {
        return Err(AlgebraError::NotSymmetric { row, col });
    }
    let mut a: Vec<Vec<BigRational>> =
        s.rows().map(|r| r.iter().cloned().map(BigRational::from_integer).collect()).collect();
    let mut sig = 0i64;

    loop {
        let n = a.len();
        if n == 0 {
            return Ok(Signature { signature: sig, nullity: 0 });
        }
        if let Some(p) = (0..n).find(|&i| !a[i][i].is_zero()) {
            sig += if a[p][p].is_positive() { 1 } else { -1 };
            a = eliminate_pivot(&a, p);
        } else if let Some((p, q)) =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero())
        {
            a = eliminate_hyperbolic(&a, p, q);
        } else {
            return Ok(Signature { signature: sig, nullity: n });
        }
    }
}

/// Schur complement of the 1×1 block at `(p, p)`.
fn eliminate_pivot(a: &[Vec<BigRational>], p: usize) -> Vec<Vec<BigRational>> {
    let rest: Vec<usize> = (0..a.len()).filter(|&i| i != p).collect();
    let pivot = &a[p][p];
    rest.iter().map(|&i| rest.iter().map(|&j| &a[i][j] - &a[i][p] * &a[p][j] / pivot).collect()).collect()
}

/// Schur complement of the block `[[0, b], [b, 0]]` on indices `p, q`.
fn eliminate_hyperbolic(a: &[Vec<BigRational>], p: usize, q: usize) -> Vec<Vec<BigRational>> {
    let rest: Vec<usize> = (0..a.len()).filter(|&i| i != p && i != q).collect();
    let b = &a[p][q];
    rest.iter()
        .map(|&i| rest.iter().map(|&j| &a[i][j] - (&a[i][p] * &a[q][j] + &a[i][q] * &a[p][j]) / b).collect())
        .collect()
}

/// Exact perfect-square test; negative input is never a square.
pub fn is_perfect_square(n: &BigInt) -> bool {
    match n.sign() {
        Sign::Minus => false,
        Sign::NoSign => true,
        Sign::Plus => {
            let r = n.sqrt();
            &r * &r == *n
        }
    }
}
