//! Matrix generators: the golden `n x (n+1)` example and seeded random matrices.
//!
//! Random entries come from `ChaCha8Rng::seed_from_u64(seed)` mapped through
//! `rand_distr::StandardNormal` (ziggurat) in `f64`, filled row by row. Both
//! are value-stable across platforms, so a seed fixes the matrix bit for bit.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::linalg::dot;
use crate::matrix::DenseMatrix;
use crate::scalar::Scalar;
use crate::tolerance::ToleranceConfig;

/// `[I_n | v]` with `v = (0.8, 0.6/√(n−1), …, 0.6/√(n−1))`, a unit vector.
///
/// Spark is `n + 1`, `μ = 0.8` and `1 + γ = 2 + ⌈√(n−1)/3⌉`.
pub fn example31<T: Scalar>(n: usize) -> Result<DenseMatrix<T>> {
    if n < 2 {
        return Err(Error::InvalidN(n));
    }
    let cols = n + 1;
    let tail = T::lit(0.6) / T::from_usize_lossy(n - 1).sqrt();
    let mut data = vec![T::zero(); n * cols];
    for i in 0..n {
        data[i * cols + i] = T::one();
        data[i * cols + n] = if i == 0 { T::lit(0.8) } else { tail };
    }
    Ok(DenseMatrix::from_raw(n, cols, data))
}

fn normal<T: Scalar>(rng: &mut ChaCha8Rng) -> T {
    T::lit(rng.sample::<f64, _>(StandardNormal))
}

/// `rows x cols` matrix of independent standard normal entries.
///
/// A column whose norm falls below `zero_col_tol` is redrawn from the
/// continuing stream.
pub fn random_gaussian<T: Scalar>(rows: usize, cols: usize, seed: u64, cfg: &ToleranceConfig<T>) -> DenseMatrix<T> {
    assert!(rows >= 1 && cols >= 1, "random_gaussian needs positive dimensions");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut data: Vec<T> = (0..rows * cols).map(|_| normal(&mut rng)).collect();
    for k in 0..cols {
        loop {
            let norm = (0..rows).map(|i| data[i * cols + k].powi(2)).sum::<T>().sqrt();
            if norm > cfg.zero_col_tol {
                break;
            }
            for i in 0..rows {
                data[i * cols + k] = normal(&mut rng);
            }
        }
    }
    DenseMatrix::from_raw(rows, cols, data)
}

/// Random `n x n` matrix with orthonormal columns: a Gaussian matrix
/// orthonormalized by modified Gram-Schmidt, applied twice.
pub fn random_orthogonal<T: Scalar>(n: usize, seed: u64, cfg: &ToleranceConfig<T>) -> DenseMatrix<T> {
    let mut columns = random_gaussian(n, n, seed, cfg).columns();
    for k in 0..n {
        let (done, rest) = columns.split_at_mut(k);
        let col = &mut rest[0];
        for _ in 0..2 {
            for q in done.iter() {
                let r = dot(q, col);
                for (c, &qi) in col.iter_mut().zip(q) {
                    *c = *c - r * qi;
                }
            }
        }
        let norm = dot(col, col).sqrt();
        for c in col.iter_mut() {
            *c = *c / norm;
        }
    }
    let mut data = Vec::with_capacity(n * n);
    for i in 0..n {
        data.extend(columns.iter().map(|c| c[i]));
    }
    DenseMatrix::from_raw(n, n, data)
}
