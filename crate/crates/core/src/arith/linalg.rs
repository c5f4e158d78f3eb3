//! Small dense exact linear algebra: right nullspaces over a field and two
//! independent determinant routines (fraction-free elimination and memoized
//! cofactor expansion) over any exact ring.

use alloc::vec;
use alloc::vec::Vec;

use super::scalar::{ExactDiv, Field, Ring};

/// Row-major dense matrix over an exact ring.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Determinant by cofactor expansion along rows, memoized on the set of
    /// still-available columns. Division-free; intended for small matrices.
    /// Panics unless the matrix is square with at most 16 columns.
    pub fn det_cofactor(&self) -> T {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        assert!(self.cols <= 16, "cofactor expansion limited to 16 columns");
        if self.rows == 0 {
            return T::one();
        }
        let full: u32 = (1u32 << self.cols) - 1;
        let mut memo: Vec<Option<T>> = vec![None; 1usize << self.cols];
        self.det_cofactor_rec(0, full, &mut memo)
    }

    fn det_cofactor_rec(&self, row: usize, avail: u32, memo: &mut Vec<Option<T>>) -> T {
        if row == self.rows {
            return T::one();
        }
        if let Some(v) = &memo[avail as usize] {
            return v.clone();
        }
        let mut acc = T::zero();
        let mut sign_flip = false;
        for j in 0..self.cols {
            let bit = 1u32 << j;
            if avail & bit == 0 {
                continue;
            }
            let entry = self.get(row, j);
            if !entry.is_zero() {
                let sub = self.det_cofactor_rec(row + 1, avail & !bit, memo);
                let term = entry.mul(&sub);
                acc = if sign_flip { acc.sub(&term) } else { acc.add(&term) };
            }
            sign_flip = !sign_flip;
        }
        memo[avail as usize] = Some(acc.clone());
        acc
    }
}

impl<T: ExactDiv> Matrix<T> {
    /// Determinant by Bareiss fraction-free elimination. All intermediate
    /// divisions are exact in the ring. Panics on a non-square input.
    pub fn det_bareiss(&self) -> T {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut m = self.data.clone();
        let at = |m: &Vec<T>, i: usize, j: usize| m[i * n + j].clone();
        let mut prev = T::one();
        let mut sign = false;
        for k in 0..n - 1 {
            if at(&m, k, k).is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !at(&m, i, k).is_zero()) else {
                    return T::zero();
                };
                for j in 0..n {
                    m.swap(k * n + j, swap * n + j);
                }
                sign = !sign;
            }
            let pivot = at(&m, k, k);
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = at(&m, i, j)
                        .mul(&pivot)
                        .sub(&at(&m, i, k).mul(&at(&m, k, j)));
                    m[i * n + j] = num
                        .exact_div(&prev)
                        .expect("Bareiss division is exact in an integral domain");
                }
                m[i * n + k] = T::zero();
            }
            prev = pivot;
        }
        let det = at(&m, n - 1, n - 1);
        if sign {
            det.neg()
        } else {
            det
        }
    }
}

impl<T: Field> Matrix<T> {
    /// Basis of the right nullspace `{v : Mv = 0}` by Gauss-Jordan
    /// elimination. Basis vectors carry a 1 in their free column and are
    /// ordered by free column index.
    pub fn nullspace(&self) -> Vec<Vec<T>> {
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let at = |m: &Vec<T>, i: usize, j: usize| m[i * cols + j].clone();

        let mut pivot_col_of_row: Vec<usize> = Vec::new();
        let mut pivot_cols: Vec<usize> = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(pr) = (r..rows).find(|&i| !at(&m, i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    m.swap(r * cols + j, pr * cols + j);
                }
            }
            let inv = at(&m, r, c).inv();
            for j in c..cols {
                m[r * cols + j] = at(&m, r, j).mul(&inv);
            }
            for i in 0..rows {
                if i != r && !at(&m, i, c).is_zero() {
                    let factor = at(&m, i, c);
                    for j in c..cols {
                        let v = at(&m, i, j).sub(&factor.mul(&at(&m, r, j)));
                        m[i * cols + j] = v;
                    }
                }
            }
            pivot_col_of_row.push(c);
            pivot_cols.push(c);
            r += 1;
            if r == rows {
                break;
            }
        }

        let mut basis = Vec::new();
        for free in 0..cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![T::zero(); cols];
            v[free] = T::one();
            for (row, &pc) in pivot_col_of_row.iter().enumerate() {
                v[pc] = at(&m, row, free).neg();
            }
            basis.push(v);
        }
        basis
    }
}
