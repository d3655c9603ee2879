//! Singular value decomposition and the norm/rank functionals built on it.
//!
//! Every quantity in [`SpectralSummary`] is derived from one SVD of the
//! input so the summary is internally consistent: the Frobenius norm is
//! taken from the singular values, not recomputed entrywise.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Relative factor for the default rank threshold (`factor * sigma_max`).
pub const DEFAULT_RANK_TOL_FACTOR: f64 = 1e-10;

const SVD_MAX_ITER: usize = 100_000;

/// Thin SVD: `min(rows, cols)` singular triplets sorted nonincreasing.
#[derive(Debug, Clone)]
pub struct SvdFactors {
    left: Matrix,
    singular_values: Vec<f64>,
    right: Matrix,
}

impl SvdFactors {
    /// Orthonormal left singular vectors as columns (rows x k).
    pub fn left_vectors(&self) -> &Matrix {
        &self.left
    }

    /// Nonincreasing, nonnegative singular values.
    pub fn singular_values(&self) -> &[f64] {
        &self.singular_values
    }

    /// Orthonormal right singular vectors as columns (cols x k).
    pub fn right_vectors(&self) -> &Matrix {
        &self.right
    }

    /// Number of stored triplets, `min(rows, cols)` of the source.
    pub fn len(&self) -> usize {
        self.singular_values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.singular_values.is_empty()
    }

    /// `U diag(sigma) V^T`.
    pub fn reconstruct(&self) -> Matrix {
        let all: Vec<usize> = (0..self.len()).collect();
        self.rank_one_sum(&all, None)
    }

    /// Sum of `sigma_i u_i v_i^T` over `indices`. When `scale` is given,
    /// each sigma is multiplied by it (used for spectrum normalization).
    pub(crate) fn rank_one_sum(&self, indices: &[usize], scale: Option<f64>) -> Matrix {
        let rows = self.left.rows();
        let cols = self.right.rows();
        if indices.is_empty() {
            return Matrix::zeros(rows, cols);
        }
        let c = scale.unwrap_or(1.0);
        let mut scaled_left = vec![0.0; rows * indices.len()];
        let mut right_t = vec![0.0; indices.len() * cols];
        for (pos, &i) in indices.iter().enumerate() {
            let s = c * self.singular_values[i];
            for r in 0..rows {
                scaled_left[r * indices.len() + pos] = s * self.left.get(r, i);
            }
            for col in 0..cols {
                right_t[pos * cols + col] = self.right.get(col, i);
            }
        }
        let lhs = Matrix::from_array(
            ndarray::Array2::from_shape_vec((rows, indices.len()), scaled_left).expect("shape"),
        );
        let rhs = Matrix::from_array(
            ndarray::Array2::from_shape_vec((indices.len(), cols), right_t).expect("shape"),
        );
        lhs.dot(&rhs).expect("inner dimensions match by construction")
    }
}

/// All norms and ranks of one matrix, computed from a shared SVD.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct SpectralSummary {
    pub spectral_norm: f64,
    pub frobenius_norm: f64,
    pub nuclear_norm: f64,
    pub rank: usize,
    pub stable_rank: f64,
    pub nuclear_rank: f64,
}

impl SpectralSummary {
    fn zero() -> Self {
        Self {
            spectral_norm: 0.0,
            frobenius_norm: 0.0,
            nuclear_norm: 0.0,
            rank: 0,
            stable_rank: 0.0,
            nuclear_rank: 0.0,
        }
    }
}

/// Thin SVD with triplets sorted by descending singular value.
pub fn svd(m: &Matrix) -> Result<SvdFactors> {
    let (rows, cols) = (m.rows(), m.cols());
    let k = rows.min(cols);
    let dm = DMatrix::from_row_slice(rows, cols, &m.entries());
    let f = dm
        .try_svd_unordered(true, true, f64::EPSILON, SVD_MAX_ITER)
        .ok_or(Error::SvdFailed)?;
    let u = f.u.expect("left vectors requested");
    let vt = f.v_t.expect("right vectors requested");
    let sigma: Vec<f64> = f.singular_values.iter().map(|s| s.max(0.0)).collect();

    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&a, &b| sigma[b].partial_cmp(&sigma[a]).expect("finite sigma"));

    let mut left = vec![0.0; rows * k];
    let mut right = vec![0.0; cols * k];
    let mut values = Vec::with_capacity(k);
    for (pos, &i) in order.iter().enumerate() {
        values.push(sigma[i]);
        for r in 0..rows {
            left[r * k + pos] = u[(r, i)];
        }
        for c in 0..cols {
            right[c * k + pos] = vt[(i, c)];
        }
    }
    Ok(SvdFactors {
        left: Matrix::from_shape_vec(rows, k, left)?,
        singular_values: values,
        right: Matrix::from_shape_vec(cols, k, right)?,
    })
}

/// Largest singular value.
pub fn spectral_norm(m: &Matrix) -> Result<f64> {
    Ok(svd(m)?.singular_values[0])
}

/// Square root of the sum of squared entries.
pub fn frobenius_norm(m: &Matrix) -> f64 {
    m.frobenius_norm()
}

/// Sum of singular values.
pub fn nuclear_norm(m: &Matrix) -> Result<f64> {
    Ok(svd(m)?.singular_values.iter().sum())
}

/// Norms and ranks from one SVD; `rank_tolerance` is the absolute
/// threshold below which a singular value does not count toward rank.
pub fn summarize(m: &Matrix, rank_tolerance: f64) -> Result<SpectralSummary> {
    if !(rank_tolerance > 0.0) {
        return Err(Error::InvalidParameter {
            name: "rank_tolerance",
            value: rank_tolerance,
            constraint: "> 0",
        });
    }
    let f = svd(m)?;
    Ok(summary_from_values(f.singular_values(), rank_tolerance))
}

/// [`summarize`] with the default threshold `1e-10 * sigma_max`.
pub fn summarize_default(m: &Matrix) -> Result<SpectralSummary> {
    let f = svd(m)?;
    let sigma_max = f.singular_values()[0];
    if sigma_max == 0.0 {
        return Ok(SpectralSummary::zero());
    }
    Ok(summary_from_values(
        f.singular_values(),
        DEFAULT_RANK_TOL_FACTOR * sigma_max,
    ))
}

fn summary_from_values(sigma: &[f64], rank_tolerance: f64) -> SpectralSummary {
    let spectral = sigma[0];
    if spectral == 0.0 {
        return SpectralSummary::zero();
    }
    let nuclear: f64 = sigma.iter().sum();
    let frobenius = sigma.iter().map(|s| s * s).sum::<f64>().sqrt();
    SpectralSummary {
        spectral_norm: spectral,
        frobenius_norm: frobenius,
        nuclear_norm: nuclear,
        rank: sigma.iter().filter(|&&s| s > rank_tolerance).count(),
        stable_rank: (frobenius * frobenius) / (spectral * spectral),
        nuclear_rank: nuclear / spectral,
    }
}

/// Splits the decomposed matrix into its best rank-`theta` approximation
/// and the residual built from the remaining triplets. The pair sums back
/// to the source matrix up to SVD accuracy.
pub fn truncate_rank(f: &SvdFactors, theta: usize) -> (Matrix, Matrix) {
    let k = f.len();
    let cut = theta.min(k);
    let head: Vec<usize> = (0..cut).collect();
    let tail: Vec<usize> = (cut..k).collect();
    (f.rank_one_sum(&head, None), f.rank_one_sum(&tail, None))
}
