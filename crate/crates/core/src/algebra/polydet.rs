use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{AlgebraError, IntMatrix, LaurentPoly};

/// Square matrix with Laurent polynomial entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> LaurentPoly) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Self { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self, AlgebraError> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(AlgebraError::DimensionMismatch { left: n, right: bad.len() });
        }
        Ok(Self { n, entries: rows.into_iter().flatten().collect() })
    }

    /// `V - t·Vᵗ` for an integer matrix `V`.
    pub fn alexander_matrix(v: &IntMatrix) -> Self {
        let t = LaurentPoly::t();
        Self::from_fn(v.dim(), |i, j| LaurentPoly::constant(v.get(i, j).clone()) - t.scale(v.get(j, i)))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row * self.n + col]
    }

    fn row(&self, row: usize) -> &[LaurentPoly] {
        &self.entries[row * self.n..(row + 1) * self.n]
    }
}

/// Evaluation nodes `0, 1, -1, 2, -2, …`.
fn nodes(count: usize) -> impl Iterator<Item = BigInt> {
    (0..count).map(|k| {
        let m = k.div_ceil(2) as i64;
        BigInt::from(if k % 2 == 1 { m } else { -m })
    })
}

/// Exact determinant of a polynomial matrix.
///
/// Each row is first multiplied by a power of `t` so that every entry is an
/// ordinary polynomial. The shifted matrix is evaluated at one more integer
/// node than its degree bound, each integer determinant is taken by Bareiss
/// elimination, and the determinant polynomial is recovered by Newton
/// interpolation over ℚ. The empty matrix has determinant 1.
pub fn poly_matrix_det(m: &PolyMatrix) -> LaurentPoly {
    let n = m.dim();
    if n == 0 {
        return LaurentPoly::one();
    }

    let mut offset = 0i64;
    let mut degree_bound = 0usize;
    let mut shifts = Vec::with_capacity(n);
    for i in 0..n {
        let row = m.row(i);
        let lo = row.iter().filter_map(LaurentPoly::min_exp).min();
        let hi = row.iter().filter_map(LaurentPoly::max_exp).max();
        match (lo, hi) {
            (Some(lo), Some(hi)) => {
                offset += lo;
                degree_bound += (hi - lo) as usize;
                shifts.push(lo);
            }
            // zero row
            _ => return LaurentPoly::zero(),
        }
    }

    let xs: Vec<BigInt> = nodes(degree_bound + 1).collect();
    let ys: Vec<BigRational> = xs
        .iter()
        .map(|x| {
            let at = IntMatrix::from_fn(n, |i, j| {
                let shifted = m.get(i, j).shift(-shifts[i]);
                eval_poly(&shifted, x)
            });
            BigRational::from_integer(at.det())
        })
        .collect();

    let coeffs = newton_to_monomial(&xs, &ys);
    LaurentPoly::from_terms(coeffs.into_iter().enumerate().map(|(k, c)| {
        debug_assert!(c.is_integer(), "interpolated determinant must be integral");
        (k as i64 + offset, c.to_integer())
    }))
}

/// Horner evaluation of a polynomial with nonnegative exponents.
fn eval_poly(p: &LaurentPoly, x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    let mut last = p.max_exp().unwrap_or(0);
    for (e, c) in p.terms().rev() {
        for _ in e..last {
            acc *= x;
        }
        acc += c;
        last = e;
    }
    for _ in 0..last {
        acc *= x;
    }
    acc
}

/// Coefficients (ascending) of the unique polynomial of degree < len through
/// the points `(xs[i], ys[i])`.
fn newton_to_monomial(xs: &[BigInt], ys: &[BigRational]) -> Vec<BigRational> {
    let len = xs.len();
    let xq: Vec<BigRational> = xs.iter().cloned().map(BigRational::from_integer).collect();
    let mut dd = ys.to_vec();
    for level in 1..len {
        for i in (level..len).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xq[i] - &xq[i - level]);
        }
    }
    // Horner on the Newton form, building monomial coefficients.
    let mut poly: Vec<BigRational> = alloc::vec![dd[len - 1].clone()];
    for k in (0..len - 1).rev() {
        // poly := poly * (x - xq[k]) + dd[k]
        let mut next = alloc::vec![BigRational::zero(); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * &xq[k];
        }
        next[0] += &dd[k];
        poly = next;
    }
    while poly.len() > 1 && poly.last().is_some_and(Zero::is_zero) {
        poly.pop();
    }
    poly
}
