// Copyright 2026 The iontrap Developers
// SPDX-License-Identifier: Apache-2.0

//! Dense complex matrices and the matrix exponential.
//!
//! Dimensions here stay at a few hundred at most, so storage is a plain
//! row-major `Vec` and products are the textbook triple loop in `i-k-j`
//! order.

use std::ops::{Index, IndexMut, Mul};

use num_traits::Zero;

use crate::scalar::{c_re, Real, C};

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<C<T>>,
}

impl<T: Real> CMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![C::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c_re(T::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C<T>) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from row slices. Panics on ragged input.
    pub fn from_rows(rows: &[Vec<C<T>>]) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == m), "ragged rows");
        Self {
            rows: n,
            cols: m,
            data: rows.iter().flatten().copied().collect(),
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[C<T>] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, s: C<T>) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| z * s).collect(),
        }
    }

    /// `self += s * other`.
    pub fn add_scaled(&mut self, s: C<T>, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = *a + s * b;
        }
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut out = Self::zeros(self.rows, rhs.cols);
        let n = rhs.cols;
        for i in 0..self.rows {
            let out_row = &mut out.data[i * n..(i + 1) * n];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                let rhs_row = &rhs.data[k * n..(k + 1) * n];
                for (o, &b) in out_row.iter_mut().zip(rhs_row) {
                    *o = *o + a * b;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[C<T>]) -> Vec<C<T>> {
        assert_eq!(self.cols, v.len(), "vector length differs");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(C::zero(), |acc, (&a, &b)| acc + a * b)
            })
            .collect()
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| (a - b).norm())
            .fold(T::zero(), T::max)
    }

    /// Maximum absolute column sum.
    pub fn one_norm(&self) -> T {
        (0..self.cols)
            .map(|j| (0..self.rows).fold(T::zero(), |acc, i| acc + self[(i, j)].norm()))
            .fold(T::zero(), T::max)
    }

    /// `max |U^dag U - I|` over all entries.
    pub fn unitarity_deviation(&self) -> T {
        self.adjoint()
            .matmul(self)
            .max_abs_diff(&Self::identity(self.cols))
    }

    /// Copies the sub-matrix picked out by `rows x cols` index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])])
    }
}

impl<T> Index<(usize, usize)> for CMatrix<T> {
    type Output = C<T>;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &C<T> {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for CMatrix<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C<T> {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Real> Mul for &CMatrix<T> {
    type Output = CMatrix<T>;

    fn mul(self, rhs: Self) -> CMatrix<T> {
        self.matmul(rhs)
    }
}

/// Taylor degree used after scaling; with `|A/2^s|_1 <= 1/2` the truncation
/// error is below `0.5^17 / 17!`.
const TAYLOR_DEGREE: usize = 16;
const PS_BLOCK: usize = 4;

/// Matrix exponential by scaling and squaring with a degree-16 Taylor
/// polynomial evaluated in Paterson-Stockmeyer form.
pub fn expm<T: Real>(a: &CMatrix<T>) -> CMatrix<T> {
    assert!(a.is_square(), "expm requires a square matrix");
    let n = a.rows();
    if n == 0 {
        return a.clone();
    }

    let norm = a.one_norm();
    let half = T::lit(0.5);
    let mut squarings = 0u32;
    let mut scale = T::one();
    while norm * scale > half {
        scale = scale * half;
        squarings += 1;
    }
    let b = a.scale(c_re(scale));

    // powers[i] = B^i for i = 0..=PS_BLOCK
    let mut powers = vec![CMatrix::identity(n), b.clone()];
    for i in 2..=PS_BLOCK {
        let next = powers[i - 1].matmul(&b);
        powers.push(next);
    }

    let coeff: Vec<T> = (0..=TAYLOR_DEGREE)
        .scan(T::one(), |acc, i| {
            if i > 0 {
                *acc = *acc / T::from_count(i);
            }
            Some(*acc)
        })
        .collect();

    // p(B) = sum_j (B^4)^j Q_j(B),  Q_j(B) = sum_{i<4} c_{4j+i} B^i,
    // Horner in B^4 from the top block down.
    let blocks = TAYLOR_DEGREE / PS_BLOCK;
    let block_poly = |j: usize| {
        let mut q = CMatrix::zeros(n, n);
        for (i, power) in powers.iter().enumerate().take(PS_BLOCK) {
            let idx = PS_BLOCK * j + i;
            if idx <= TAYLOR_DEGREE {
                q.add_scaled(c_re(coeff[idx]), power);
            }
        }
        q
    };
    let mut result = CMatrix::identity(n).scale(c_re(coeff[TAYLOR_DEGREE]));
    if !TAYLOR_DEGREE.is_multiple_of(PS_BLOCK) {
        result = block_poly(blocks);
    }
    for j in (0..blocks).rev() {
        result = result.matmul(&powers[PS_BLOCK]);
        result.add_scaled(c_re(T::one()), &block_poly(j));
    }

    for _ in 0..squarings {
        result = result.matmul(&result);
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::c;

    fn pauli_x() -> CMatrix<f64> {
        CMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(1.0, 0.0), c(0.0, 0.0)],
        ])
    }

    #[test]
    fn expm_of_zero_is_identity() {
        let z = CMatrix::<f64>::zeros(5, 5);
        assert_eq!(expm(&z).max_abs_diff(&CMatrix::identity(5)), 0.0);
    }

    #[test]
    fn expm_of_diagonal() {
        let d = CMatrix::from_fn(3, 3, |i, j| {
            if i == j {
                c(i as f64 - 1.0, 0.5 * i as f64)
            } else {
                c(0.0, 0.0)
            }
        });
        let e = expm(&d);
        for i in 0..3 {
            let want = d[(i, i)].exp();
            assert!((e[(i, i)] - want).norm() < 1e-14);
        }
    }

    #[test]
    fn expm_rotation_large_angle() {
        // exp(-i theta X) = cos theta I - i sin theta X
        for &theta in &[0.1, 1.0, 7.3, 42.0] {
            let a = pauli_x().scale(c(0.0, -theta));
            let e = expm(&a);
            let want = CMatrix::from_rows(&[
                vec![c(theta.cos(), 0.0), c(0.0, -theta.sin())],
                vec![c(0.0, -theta.sin()), c(theta.cos(), 0.0)],
            ]);
            assert!(e.max_abs_diff(&want) < 1e-13, "theta = {theta}");
        }
    }

    #[test]
    fn expm_nilpotent_is_exact_polynomial() {
        // strictly upper-triangular N with N^3 = 0: exp(N) = I + N + N^2/2
        let nil = CMatrix::from_fn(3, 3, |i, j| {
            if j > i {
                c((i + j) as f64, 1.0)
            } else {
                c(0.0, 0.0)
            }
        });
        let mut want = CMatrix::identity(3);
        want.add_scaled(c(1.0, 0.0), &nil);
        want.add_scaled(c(0.5, 0.0), &nil.matmul(&nil));
        assert!(expm(&nil).max_abs_diff(&want) < 1e-13);
    }

    #[test]
    fn matmul_and_adjoint() {
        let a = CMatrix::from_rows(&[
            vec![c(1.0, 2.0), c(0.0, -1.0)],
            vec![c(3.0, 0.0), c(1.0, 1.0)],
        ]);
        let prod = a.matmul(&a.adjoint());
        // Hermitian product
        assert!(prod.max_abs_diff(&prod.adjoint()) < 1e-15);
        assert_eq!(prod[(0, 0)], c(6.0, 0.0));
    }
}
