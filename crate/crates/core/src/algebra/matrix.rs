use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::AlgebraError;

/// Square matrix of arbitrary-precision integers, row-major.
///
/// Dimension 0 is allowed and stands for the empty matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, entries: vec![BigInt::zero(); n * n] }
    }

    pub fn empty() -> Self {
        Self::zeros(0)
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from rows; every row must have as many entries as there
    /// are rows.
    pub fn from_rows<R, C>(rows: R) -> Result<Self, AlgebraError>
    where
        R: IntoIterator,
        R::Item: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let rows: Vec<Vec<BigInt>> =
            rows.into_iter().map(|r| r.into_iter().map(Into::into).collect()).collect();
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(AlgebraError::DimensionMismatch { left: n, right: bad.len() });
        }
        Ok(Self { n, entries: rows.into_iter().flatten().collect() })
    }

    /// Builds an `n × n` matrix from a function of `(row, col)`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Self { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: BigInt) {
        self.entries[row * self.n + col] = value;
    }

    pub fn row(&self, row: usize) -> &[BigInt] {
        &self.entries[row * self.n..(row + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> + '_ {
        (0..self.n).map(move |i| self.row(i))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    pub(crate) fn first_asymmetry(&self) -> Option<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| (i + 1..self.n).map(move |j| (i, j)))
            .find(|&(i, j)| self.get(i, j) != self.get(j, i))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Result<Self, AlgebraError> {
        if self.n != other.n {
            return Err(AlgebraError::DimensionMismatch { left: self.n, right: other.n });
        }
        Ok(Self {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.zip_with(other, |a, b| a - b)
    }

    /// `V + Vᵗ`.
    pub fn symmetrize(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(i, j) + self.get(j, i))
    }

    /// `V - Vᵗ`.
    pub fn antisymmetrize(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(i, j) - self.get(j, i))
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn block_sum(&self, other: &Self) -> Self {
        let (a, n) = (self.n, self.n + other.n);
        Self::from_fn(n, |i, j| match (i < a, j < a) {
            (true, true) => self.get(i, j).clone(),
            (false, false) => other.get(i - a, j - a).clone(),
            _ => BigInt::zero(),
        })
    }

    /// Exact determinant by fraction-free (Bareiss) elimination. The empty
    /// matrix has determinant 1.
    pub fn det(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut m: Vec<Vec<BigInt>> = self.rows().map(<[BigInt]>::to_vec).collect();
        let mut sign_flip = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(i, k);
                        sign_flip = !sign_flip;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    // exact by Sylvester's identity
                    m[i][j] = num / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if sign_flip {
            -d
        } else {
            d
        }
    }
}

impl fmt::Display for IntMatrix {
    /// One row per line, entries separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}
