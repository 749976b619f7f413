//! Dense real matrices with column-oriented helpers.

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::Scalar;
use crate::tolerance::ToleranceConfig;

/// A validated `rows x cols` real matrix stored row-major.
///
/// Entries are finite and, for matrices built through [`DenseMatrix::new`],
/// no column has norm at or below `zero_col_tol`.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> DenseMatrix<T> {
    /// Builds and validates a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, entries: Vec<T>, cfg: &ToleranceConfig<T>) -> Result<Self> {
        let expected = rows * cols;
        if rows == 0 || cols == 0 || entries.len() != expected {
            return Err(Error::DimensionMismatch { expected, found: entries.len() });
        }
        if let Some(i) = entries.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteEntry(i));
        }
        let m = Self { rows, cols, data: entries };
        if let Some(k) = (0..cols).find(|&k| m.column_norm(k) <= cfg.zero_col_tol) {
            return Err(Error::ZeroColumn(k));
        }
        Ok(m)
    }

    /// Builds a matrix from a list of columns of equal length.
    pub fn from_columns(columns: &[Vec<T>], cfg: &ToleranceConfig<T>) -> Result<Self> {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vec::len);
        if let Some(bad) = columns.iter().find(|c| c.len() != rows) {
            return Err(Error::DimensionMismatch { expected: rows, found: bad.len() });
        }
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            data.extend(columns.iter().map(|c| c[i]));
        }
        Self::new(rows, cols, data, cfg)
    }

    /// Unvalidated constructor for derived matrices (Gram matrices, minors).
    pub(crate) fn from_raw(rows: usize, cols: usize, data: Vec<T>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        Self { rows, cols, data }
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![T::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = T::one();
        }
        Self::from_raw(n, n, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Row-major entries.
    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn get(&self, row: usize, col: usize) -> T {
        self.data[row * self.cols + col]
    }

    pub fn column(&self, k: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, k)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<T>> {
        (0..self.cols).map(|k| self.column(k)).collect()
    }

    pub fn column_norm(&self, k: usize) -> T {
        (0..self.rows).map(|i| self.get(i, k).powi(2)).sum::<T>().sqrt()
    }

    /// Rescales every column to unit Euclidean norm.
    pub fn normalize_columns(&self) -> Self {
        let norms: Vec<T> = (0..self.cols).map(|k| self.column_norm(k)).collect();
        let data = self.data.iter().enumerate().map(|(idx, &v)| v / norms[idx % self.cols]).collect();
        Self::from_raw(self.rows, self.cols, data)
    }

    /// `AᵀA`, a `cols x cols` symmetric matrix. Normalize first to get unit diagonal.
    pub fn gram_matrix(&self) -> Self {
        let columns = self.columns();
        let m = self.cols;
        let mut g = vec![T::zero(); m * m];
        for k in 0..m {
            for j in k..m {
                let d = linalg::dot(&columns[k], &columns[j]);
                g[k * m + j] = d;
                g[j * m + k] = d;
            }
        }
        Self::from_raw(m, m, g)
    }

    /// Copies the selected columns, in order.
    pub fn column_submatrix(&self, indices: &[usize]) -> Result<Self> {
        if let Some(&index) = indices.iter().find(|&&i| i >= self.cols) {
            return Err(Error::IndexOutOfRange { index, cols: self.cols });
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::UnsortedIndices);
        }
        if indices.is_empty() {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        let mut data = Vec::with_capacity(self.rows * indices.len());
        for i in 0..self.rows {
            data.extend(indices.iter().map(|&k| self.get(i, k)));
        }
        Ok(Self::from_raw(self.rows, indices.len(), data))
    }

    /// Principal submatrix on `indices` (rows and columns).
    pub fn principal_minor(&self, indices: &[usize]) -> Self {
        let p = indices.len();
        let mut data = Vec::with_capacity(p * p);
        for &i in indices {
            data.extend(indices.iter().map(|&j| self.get(i, j)));
        }
        Self::from_raw(p, p, data)
    }

    /// Appends a column, revalidating the result.
    pub fn with_column(&self, column: &[T], cfg: &ToleranceConfig<T>) -> Result<Self> {
        let mut columns = self.columns();
        columns.push(column.to_vec());
        Self::from_columns(&columns, cfg)
    }

    /// `A x`.
    pub fn mul_vec(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: x.len() });
        }
        Ok(self.data.chunks_exact(self.cols).map(|row| linalg::dot(row, x)).collect())
    }

    /// Number of pivots of a column-pivoted QR exceeding
    /// `rank_tol_factor * largest_pivot * max(rows, cols)`.
    pub fn numerical_rank(&self, cfg: &ToleranceConfig<T>) -> usize {
        let columns = self.columns();
        let refs: Vec<&[T]> = columns.iter().map(Vec::as_slice).collect();
        linalg::rank_of_columns(&refs, self.rows, cfg.rank_tol_factor)
    }
}
