//! Dense real matrix carrier used by every other module.
//!
//! Entries are validated finite at construction; all arithmetic below
//! assumes (and preserves, at desk scale) that invariant. Values are
//! immutable once built, so they can be shared freely across threads.

use ndarray::Array2;

use crate::error::{Error, Result};

/// Dense row-major real matrix with positive dimensions and finite entries.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    data: Array2<f64>,
}

impl Matrix {
    /// Builds a matrix from a row-major entry buffer.
    pub fn from_shape_vec(rows: usize, cols: usize, entries: Vec<f64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix { rows, cols });
        }
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch {
                rows,
                cols,
                len: entries.len(),
            });
        }
        if let Some(pos) = entries.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                row: pos / cols,
                col: pos % cols,
            });
        }
        let data = Array2::from_shape_vec((rows, cols), entries).expect("shape checked above");
        Ok(Self { data })
    }

    /// Builds a matrix from equal-length rows.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch {
                rows: r,
                cols: c,
                len: rows.iter().map(Vec::len).sum(),
            });
        }
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            entries.extend_from_slice(row);
        }
        Self::from_shape_vec(r, c, entries)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "dimensions must be positive");
        Self {
            data: Array2::zeros((rows, cols)),
        }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n > 0, "dimension must be positive");
        Self {
            data: Array2::eye(n),
        }
    }

    /// Square matrix with `diag` on the diagonal.
    pub fn from_diag(diag: &[f64]) -> Result<Self> {
        let n = diag.len();
        if n == 0 {
            return Err(Error::EmptyMatrix { rows: 0, cols: 0 });
        }
        let mut entries = vec![0.0; n * n];
        for (i, &v) in diag.iter().enumerate() {
            entries[i * n + i] = v;
        }
        Self::from_shape_vec(n, n, entries)
    }

    pub(crate) fn from_array(data: Array2<f64>) -> Self {
        debug_assert!(data.nrows() > 0 && data.ncols() > 0);
        Self { data }
    }

    pub(crate) fn array(&self) -> &Array2<f64> {
        &self.data
    }

    pub fn rows(&self) -> usize {
        self.data.nrows()
    }

    pub fn cols(&self) -> usize {
        self.data.ncols()
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[[row, col]]
    }

    /// Row `i` as a contiguous slice.
    pub fn row(&self, i: usize) -> Vec<f64> {
        self.data.row(i).to_vec()
    }

    /// Row-major copy of all entries.
    pub fn entries(&self) -> Vec<f64> {
        self.data.iter().copied().collect()
    }

    pub fn transpose(&self) -> Matrix {
        Self::from_array(self.data.t().to_owned())
    }

    /// Matrix product `self * rhs`.
    pub fn dot(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols() != rhs.rows() {
            return Err(Error::DimensionMismatch {
                context: "matrix product",
                left: (self.rows(), self.cols()),
                right: (rhs.rows(), rhs.cols()),
            });
        }
        Ok(Self::from_array(self.data.dot(&rhs.data)))
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_check(rhs, "matrix sum")?;
        Ok(Self::from_array(&self.data + &rhs.data))
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_check(rhs, "matrix difference")?;
        Ok(Self::from_array(&self.data - &rhs.data))
    }

    pub fn scale(&self, c: f64) -> Matrix {
        Self::from_array(&self.data * c)
    }

    /// Square root of the sum of squared entries.
    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0f64, |acc, v| acc.max(v.abs()))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0.0)
    }

    fn zip_check(&self, rhs: &Matrix, context: &'static str) -> Result<()> {
        if self.rows() != rhs.rows() || self.cols() != rhs.cols() {
            return Err(Error::DimensionMismatch {
                context,
                left: (self.rows(), self.cols()),
                right: (rhs.rows(), rhs.cols()),
            });
        }
        Ok(())
    }
}
