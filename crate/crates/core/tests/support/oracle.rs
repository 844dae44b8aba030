//! Brute-force reference computations and generators shared by the
//! integration tests. Nothing here calls the determinant or signature code
//! under test.

#![allow(dead_code)]

use knotcert_core::{IntMatrix, LaurentPoly};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

/// All permutations of `0..n` with their signs.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i32)> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out.into_iter()
        .map(|p| {
            let inversions =
                (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            (p, if inversions % 2 == 0 { 1 } else { -1 })
        })
        .collect()
}

/// Leibniz expansion over Laurent polynomial entries.
pub fn perm_det(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    permutations(m.len())
        .into_iter()
        .map(|(p, sign)| {
            let term: LaurentPoly = p.iter().enumerate().map(|(i, &j)| m[i][j].clone()).product();
            if sign < 0 {
                -term
            } else {
                term
            }
        })
        .sum()
}

/// Leibniz expansion of `det(V - t Vᵗ)`.
pub fn alexander_by_permutations(v: &IntMatrix) -> LaurentPoly {
    let n = v.dim();
    let entries: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| LaurentPoly::from_terms([(0, v.get(i, j).clone()), (1, -v.get(j, i).clone())]))
                .collect()
        })
        .collect();
    perm_det(&entries)
}

type Dense = Vec<BigInt>;

fn dense_mul(a: &Dense, b: &Dense) -> Dense {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn dense_add(a: &mut Dense, b: &Dense) {
    if a.len() < b.len() {
        a.resize(b.len(), BigInt::zero());
    }
    for (i, y) in b.iter().enumerate() {
        a[i] += y;
    }
}

/// Ascending coefficients of `det(x·I - S)` by Leibniz expansion with dense
/// integer polynomial arithmetic.
pub fn charpoly(s: &IntMatrix) -> Dense {
    let n = s.dim();
    let entry = |i: usize, j: usize| -> Dense {
        if i == j {
            vec![-s.get(i, j).clone(), BigInt::from(1)]
        } else {
            vec![-s.get(i, j).clone()]
        }
    };
    let mut total: Dense = vec![BigInt::zero()];
    for (p, sign) in permutations(n) {
        let mut term: Dense = vec![BigInt::from(sign)];
        for (i, &j) in p.iter().enumerate() {
            term = dense_mul(&term, &entry(i, j));
        }
        dense_add(&mut total, &term);
    }
    total
}

fn sign_variations(coeffs: impl Iterator<Item = BigInt>) -> usize {
    let signs: Vec<bool> = coeffs.filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Inertia of a symmetric matrix from its characteristic polynomial. All
/// roots are real, so Descartes' rule of signs counts positive and negative
/// roots exactly; the multiplicity of 0 is the nullity.
pub fn inertia_by_descartes(s: &IntMatrix) -> (i64, usize) {
    let p = charpoly(s);
    let nullity = p.iter().position(|c| !c.is_zero()).unwrap_or(p.len());
    let q: Dense = p[nullity..].to_vec();
    let positive = sign_variations(q.iter().cloned());
    let negative =
        sign_variations(q.iter().enumerate().map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() }));
    (positive as i64 - negative as i64, nullity)
}

/// The block-diagonal standard skew form's strictly upper part: 1 at
/// `(2k, 2k+1)`.
pub fn standard_upper(n: usize) -> IntMatrix {
    IntMatrix::from_fn(n, |i, j| if i % 2 == 0 && j == i + 1 { BigInt::from(1) } else { BigInt::zero() })
}

/// `A + U` for a symmetric `A` with entries in [-5, 5] and `U` the strictly
/// upper part of the standard skew form. Always a Seifert matrix.
pub fn seifert_matrix(max_genus: usize) -> impl Strategy<Value = IntMatrix> {
    (0..=max_genus).prop_flat_map(seifert_matrix_of_genus)
}

pub fn seifert_matrix_of_genus(g: usize) -> impl Strategy<Value = IntMatrix> {
    let n = 2 * g;
    proptest::collection::vec(-5i64..=5, n * (n + 1) / 2).prop_map(move |upper| {
        let mut a = IntMatrix::zeros(n);
        let mut it = upper.into_iter();
        for i in 0..n {
            for j in i..n {
                let x = BigInt::from(it.next().unwrap());
                a.set(i, j, x.clone());
                a.set(j, i, x);
            }
        }
        a.try_add(&standard_upper(n)).unwrap()
    })
}

/// Symmetric integer matrix of dimension `0..=max_dim`, entries in [-4, 4].
pub fn symmetric_matrix(max_dim: usize) -> impl Strategy<Value = IntMatrix> {
    (0..=max_dim).prop_flat_map(|n| {
        proptest::collection::vec(-4i64..=4, n * (n + 1) / 2).prop_map(move |upper| {
            let mut a = IntMatrix::zeros(n);
            let mut it = upper.into_iter();
            for i in 0..n {
                for j in i..n {
                    let x = BigInt::from(it.next().unwrap());
                    a.set(i, j, x.clone());
                    a.set(j, i, x);
                }
            }
            a
        })
    })
}

/// Sparse Laurent polynomial with exponents in [-2, 2] and small coefficients.
pub fn laurent_poly() -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec((-2i64..=2, -3i64..=3), 0..4).prop_map(LaurentPoly::from_terms)
}

/// Square matrix of Laurent polynomials, dimension `0..=max_dim`.
pub fn laurent_matrix(max_dim: usize) -> impl Strategy<Value = Vec<Vec<LaurentPoly>>> {
    (0..=max_dim)
        .prop_flat_map(|n| proptest::collection::vec(proptest::collection::vec(laurent_poly(), n), n))
}
