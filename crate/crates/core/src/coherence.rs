//! Pairwise column coherences, mutual coherence and the coherence index.
//!
//! The coherence index `γ(A)` is the smallest `p` for which the `p` largest
//! pairwise coherences sum to at least one. Every set of `γ(A)` columns then
//! has a diagonally dominant Gram matrix, so `spark(A) >= 1 + γ(A)`. When no
//! prefix sum reaches one the whole Gram matrix is diagonally dominant and
//! the columns are independent.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::linalg::dot;
use crate::matrix::DenseMatrix;
use crate::scalar::Scalar;
use crate::tolerance::ToleranceConfig;

/// Sorted pairwise coherences of a matrix together with the derived μ and γ.
#[derive(Debug, Clone, PartialEq)]
pub struct CoherenceProfile<T> {
    /// Column pairs `(k, j)`, `k < j`, in the order of `sorted_mu`.
    pub pairs: Vec<(usize, usize)>,
    /// Non-increasing pairwise coherences.
    pub sorted_mu: Vec<T>,
    /// `prefix_sums[i] = sorted_mu[0] + ... + sorted_mu[i]`.
    pub prefix_sums: Vec<T>,
    /// Mutual coherence, `sorted_mu[0]`.
    pub mu: T,
    /// Coherence index, `None` when no prefix sum reaches `1 - gamma_slack`.
    pub gamma: Option<usize>,
}

impl<T: Scalar> CoherenceProfile<T> {
    pub fn pair_count(&self) -> usize {
        self.sorted_mu.len()
    }

    /// Sum of all pairwise coherences.
    pub fn total(&self) -> T {
        self.prefix_sums.last().copied().unwrap_or_else(T::zero)
    }
}

/// `|a·b| / (‖a‖‖b‖)`, evaluated as `|a·b| / sqrt((a·a)(b·b))` so identical
/// columns give exactly one.
pub(crate) fn coherence_of<T: Scalar>(a: &[T], b: &[T]) -> T {
    let c = dot(a, b).abs() / (dot(a, a) * dot(b, b)).sqrt();
    c.min(T::one())
}

/// Computes and sorts all `m(m-1)/2` pairwise coherences.
pub fn pairwise_coherences<T: Scalar>(a: &DenseMatrix<T>, cfg: &ToleranceConfig<T>) -> Result<CoherenceProfile<T>> {
    let m = a.cols();
    if m < 2 {
        return Err(Error::TooFewColumns(m));
    }
    let columns = a.columns();
    let mut entries: Vec<((usize, usize), T)> = Vec::with_capacity(m * (m - 1) / 2);
    for k in 0..m {
        for j in k + 1..m {
            entries.push(((k, j), coherence_of(&columns[k], &columns[j])));
        }
    }
    // descending by value, ascending by pair index on ties
    entries.sort_by(|x, y| y.1.partial_cmp(&x.1).unwrap_or(Ordering::Equal).then(x.0.cmp(&y.0)));

    let (pairs, sorted_mu): (Vec<_>, Vec<_>) = entries.into_iter().unzip();
    let prefix_sums: Vec<T> = sorted_mu
        .iter()
        .scan(T::zero(), |acc, &v| {
            *acc = *acc + v;
            Some(*acc)
        })
        .collect();
    let mut profile = CoherenceProfile { mu: sorted_mu[0], pairs, sorted_mu, prefix_sums, gamma: None };
    profile.gamma = coherence_index(&profile, cfg);
    Ok(profile)
}

/// Largest absolute normalized inner product between distinct columns.
pub fn mutual_coherence<T: Scalar>(a: &DenseMatrix<T>) -> Result<T> {
    let m = a.cols();
    if m < 2 {
        return Err(Error::TooFewColumns(m));
    }
    let columns = a.columns();
    let mut mu = T::zero();
    for k in 0..m {
        for j in k + 1..m {
            mu = mu.max(coherence_of(&columns[k], &columns[j]));
        }
    }
    Ok(mu)
}

/// Smallest `p` with `prefix_sums[p-1] >= 1 - gamma_slack`.
pub fn coherence_index<T: Scalar>(profile: &CoherenceProfile<T>, cfg: &ToleranceConfig<T>) -> Option<usize> {
    let target = T::one() - cfg.gamma_slack;
    profile.prefix_sums.iter().position(|&s| s >= target).map(|i| i + 1)
}

/// Sum of the `n` largest pairwise coherences of an `n x m` matrix, `n < m`.
///
/// Always at least one: otherwise every `(n+1)`-column Gram minor would be
/// diagonally dominant and hence nonsingular, impossible in dimension `n`.
pub fn lemma31_sum<T: Scalar>(a: &DenseMatrix<T>, cfg: &ToleranceConfig<T>) -> Result<T> {
    if a.rows() >= a.cols() {
        return Err(Error::NotUnderdetermined { rows: a.rows(), cols: a.cols() });
    }
    let profile = pairwise_coherences(a, cfg)?;
    Ok(profile.prefix_sums[a.rows() - 1])
}
