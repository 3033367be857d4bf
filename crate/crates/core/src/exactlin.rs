//! Dense exact linear algebra: matrices and rank-2/3 tensors over any [`Scalar`].
//!
//! Conventions used throughout the crate:
//!
//! * Vectors are coordinate columns; `Matrix::mul_vec` computes `M·v`.
//! * A rank-2 tensor `t = Σ t[i][j] e_i ⊗ e_j` is stored by its coefficient grid;
//!   [`Tensor2::as_map`] returns that grid as a matrix, so the matrix of the swap
//!   `σ(t)` is the transpose.
//! * Operators act on tensor legs by `(M ⊗ id) t = M·t` and `(id ⊗ M) t = t·Mᵀ`
//!   on coefficient grids ([`Tensor2::apply_left`] / [`Tensor2::apply_right`]).
//! * Rank-3 tensors are cubical (all three legs the same dimension, as needed by
//!   the quadratic tensor equations); [`Tensor3::permute`] relabels slots with
//!   `out[s] = in[perm[s]]`.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    /// Zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    /// Identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    /// Build from explicit rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows in matrix literal".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at (row, col).
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    /// Set entry at (row, col).
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    /// True iff every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn assert_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "matrix shapes {}x{} and {}x{} differ",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// Entrywise sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.assert_same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    /// Entrywise difference.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.assert_same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    /// Entrywise negation.
    pub fn neg(&self) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a.clone()).collect(),
        }
    }

    /// Entrywise scaling.
    pub fn scale(&self, c: &T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j).clone() + a.clone() * other.get(k, j).clone();
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Transpose.
    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Matrix-vector product `M·v` with `v` a coordinate column.
    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "matrix has {} columns but vector has length {}",
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![T::zero(); self.rows];
        for i in 0..self.rows {
            let mut acc = T::zero();
            for j in 0..self.cols {
                acc = acc + self.get(i, j).clone() * v[j].clone();
            }
            out[i] = acc;
        }
        Ok(out)
    }

    /// Exact inverse by Gauss-Jordan elimination.  Errors if not square or singular.
    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "cannot invert non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            // Find a pivot in this column at or below the diagonal.
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero());
            let pivot = match pivot {
                Some(p) => p,
                None => return Err(Error::Singular("matrix is singular".into())),
            };
            if pivot != col {
                for j in 0..n {
                    a.data.swap(col * n + j, pivot * n + j);
                    inv.data.swap(col * n + j, pivot * n + j);
                }
            }
            let p = a.get(col, col).clone();
            for j in 0..n {
                a.set(col, j, a.get(col, j).clone() / p.clone());
                inv.set(col, j, inv.get(col, j).clone() / p.clone());
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    let av = a.get(r, j).clone() - f.clone() * a.get(col, j).clone();
                    a.set(r, j, av);
                    let iv = inv.get(r, j).clone() - f.clone() * inv.get(col, j).clone();
                    inv.set(r, j, iv);
                }
            }
        }
        Ok(inv)
    }

    /// Exact determinant by fraction-producing Gaussian elimination.
    pub fn det(&self) -> Result<T> {
        if self.rows != self.cols {
            return Err(Error::Dimension("determinant of non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = T::one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero());
            let pivot = match pivot {
                Some(p) => p,
                None => return Ok(T::zero()),
            };
            if pivot != col {
                for j in 0..n {
                    a.data.swap(col * n + j, pivot * n + j);
                }
                det = -det;
            }
            let p = a.get(col, col).clone();
            det = det * p.clone();
            for r in (col + 1)..n {
                if a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone() / p.clone();
                for j in col..n {
                    let v = a.get(r, j).clone() - f.clone() * a.get(col, j).clone();
                    a.set(r, j, v);
                }
            }
        }
        Ok(det)
    }

    /// Determinants of the leading principal minors, sizes 1..=n.
    pub fn leading_minors(&self) -> Result<Vec<T>> {
        if self.rows != self.cols {
            return Err(Error::Dimension("minors of non-square matrix".into()));
        }
        (1..=self.rows)
            .map(|k| {
                let mut sub = Self::zeros(k, k);
                for i in 0..k {
                    for j in 0..k {
                        sub.set(i, j, self.get(i, j).clone());
                    }
                }
                sub.det()
            })
            .collect()
    }

    /// Solve `self · x = b` exactly for a single right-hand side.
    /// Errors if the matrix is not square or is singular.
    pub fn solve(&self, b: &[T]) -> Result<Vec<T>> {
        self.inverse()?.mul_vec(b)
    }

    /// First (row-major) nonzero entry as (row, col, value), if any.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &T)> {
        self.data
            .iter()
            .enumerate()
            .find(|(_, v)| !v.is_zero())
            .map(|(idx, v)| (idx / self.cols, idx % self.cols, v))
    }
}

use num_traits::Zero;

/// Rank-2 tensor `Σ t[i][j] e_i ⊗ e_j` with possibly different leg dimensions,
/// stored by its coefficient grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor2<T> {
    grid: Matrix<T>,
}

impl<T: Scalar> Tensor2<T> {
    /// Zero tensor with the given leg dimensions.
    pub fn zeros(left_dim: usize, right_dim: usize) -> Self {
        Tensor2 { grid: Matrix::zeros(left_dim, right_dim) }
    }

    /// Build from the coefficient grid (rows = left leg, cols = right leg).
    pub fn from_grid(grid: Matrix<T>) -> Self {
        Tensor2 { grid }
    }

    /// Dimension of the left leg.
    pub fn left_dim(&self) -> usize {
        self.grid.rows()
    }

    /// Dimension of the right leg.
    pub fn right_dim(&self) -> usize {
        self.grid.cols()
    }

    /// Coefficient of `e_i ⊗ e_j`.
    pub fn get(&self, i: usize, j: usize) -> &T {
        self.grid.get(i, j)
    }

    /// Set the coefficient of `e_i ⊗ e_j`.
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.grid.set(i, j, v)
    }

    /// The coefficient grid viewed as a matrix (row = left index).
    pub fn as_map(&self) -> &Matrix<T> {
        &self.grid
    }

    /// Entrywise sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Tensor2 { grid: self.grid.add(&other.grid)? })
    }

    /// Entrywise difference.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        Ok(Tensor2 { grid: self.grid.sub(&other.grid)? })
    }

    /// Entrywise negation.
    pub fn neg(&self) -> Self {
        Tensor2 { grid: self.grid.neg() }
    }

    /// The leg swap `σ(Σ x_i ⊗ y_i) = Σ y_i ⊗ x_i`; on grids, the transpose.
    pub fn swap(&self) -> Self {
        Tensor2 { grid: self.grid.transpose() }
    }

    /// Apply an operator on the left leg: `(M ⊗ id) t`, i.e. grid `M·t`.
    pub fn apply_left(&self, m: &Matrix<T>) -> Result<Self> {
        Ok(Tensor2 { grid: m.mul(&self.grid)? })
    }

    /// Apply an operator on the right leg: `(id ⊗ M) t`, i.e. grid `t·Mᵀ`.
    pub fn apply_right(&self, m: &Matrix<T>) -> Result<Self> {
        Ok(Tensor2 { grid: self.grid.mul(&m.transpose())? })
    }

    /// True iff every coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.grid.is_zero()
    }

    /// First nonzero coefficient as (i, j, value), row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &T)> {
        self.grid.first_nonzero()
    }
}

/// Cubical rank-3 tensor `Σ t[i][j][k] e_i ⊗ e_j ⊗ e_k`, all legs of one dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor3<T> {
    dim: usize,
    data: Vec<T>,
}

impl<T: Scalar> Tensor3<T> {
    /// Zero tensor with all three legs of dimension `dim`.
    pub fn zeros(dim: usize) -> Self {
        Tensor3 { dim, data: vec![T::zero(); dim * dim * dim] }
    }

    /// Leg dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coefficient of `e_i ⊗ e_j ⊗ e_k`.
    pub fn get(&self, i: usize, j: usize, k: usize) -> &T {
        &self.data[(i * self.dim + j) * self.dim + k]
    }

    /// Set the coefficient of `e_i ⊗ e_j ⊗ e_k`.
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: T) {
        self.data[(i * self.dim + j) * self.dim + k] = v;
    }

    /// Add `v` to the coefficient of `e_i ⊗ e_j ⊗ e_k`.
    pub fn add_at(&mut self, i: usize, j: usize, k: usize, v: T) {
        let idx = (i * self.dim + j) * self.dim + k;
        self.data[idx] = self.data[idx].clone() + v;
    }

    fn assert_same_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::Dimension(format!(
                "rank-3 tensor dims {} and {} differ",
                self.dim, other.dim
            )));
        }
        Ok(())
    }

    /// Entrywise sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.assert_same_dim(other)?;
        Ok(Tensor3 {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    /// Entrywise difference.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.assert_same_dim(other)?;
        Ok(Tensor3 {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    /// Entrywise negation.
    pub fn neg(&self) -> Self {
        Tensor3 { dim: self.dim, data: self.data.iter().map(|a| -a.clone()).collect() }
    }

    /// Slot permutation: output slot `s` carries the factor that sat in input
    /// slot `perm[s]`.  A source term at indices `src` therefore lands at
    /// `dst[s] = src[perm[s]]`.  For example `perm = [1,0,2]` swaps the first
    /// two legs, and `perm = [2,0,1]` sends `x⊗y⊗z` to `z⊗x⊗y`.
    pub fn permute(&self, perm: [usize; 3]) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let src = [i, j, k];
                    let dst = [src[perm[0]], src[perm[1]], src[perm[2]]];
                    out.set(dst[0], dst[1], dst[2], self.get(i, j, k).clone());
                }
            }
        }
        out
    }

    /// Apply an operator matrix to one slot (0, 1 or 2), identity on the others.
    pub fn apply_slot(&self, m: &Matrix<T>, slot: usize) -> Result<Self> {
        if m.rows() != self.dim || m.cols() != self.dim {
            return Err(Error::Dimension(format!(
                "operator is {}x{} but tensor legs have dimension {}",
                m.rows(),
                m.cols(),
                self.dim
            )));
        }
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = self.get(i, j, k);
                    if v.is_zero() {
                        continue;
                    }
                    // e_{idx[slot]} ↦ Σ_p m[p][idx[slot]] e_p
                    let idx = [i, j, k];
                    for p in 0..n {
                        let coeff = m.get(p, idx[slot]);
                        if coeff.is_zero() {
                            continue;
                        }
                        let mut dst = idx;
                        dst[slot] = p;
                        out.add_at(dst[0], dst[1], dst[2], coeff.clone() * v.clone());
                    }
                }
            }
        }
        Ok(out)
    }

    /// True iff every coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// First nonzero coefficient as (i, j, k, value), lexicographic order.
    pub fn first_nonzero(&self) -> Option<(usize, usize, usize, &T)> {
        self.data.iter().enumerate().find(|(_, v)| !v.is_zero()).map(|(idx, v)| {
            let k = idx % self.dim;
            let j = (idx / self.dim) % self.dim;
            let i = idx / (self.dim * self.dim);
            (i, j, k, v)
        })
    }
}
