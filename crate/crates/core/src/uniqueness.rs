//! Uniqueness certificates for sparse solutions of `Ax = b`.
//!
//! A solution with `||x||_0 < spark(A)/2` is the unique sparsest one. Since
//! `spark(A) >= 1 + γ(A) >= 1 + 1/μ(A)`, the same holds with either lower
//! bound in place of the spark; the coherence-index criterion is never
//! weaker than the mutual-coherence one.

use std::collections::BTreeSet;

use crate::coherence::pairwise_coherences;
use crate::error::{Error, Result};
use crate::linalg::{dot, least_squares};
use crate::matrix::DenseMatrix;
use crate::scalar::Scalar;
use crate::spark::SparkValue;
use crate::subsets::Combinations;
use crate::tolerance::ToleranceConfig;

/// A threshold on `||x||_0` that may be infinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Threshold<T> {
    Finite(T),
    Infinite,
}

impl<T: Scalar> Threshold<T> {
    /// Strict comparison `l0 < self`.
    pub fn admits(self, l0: usize) -> bool {
        match self {
            Threshold::Finite(t) => T::from_usize_lossy(l0) < t,
            Threshold::Infinite => true,
        }
    }

    fn half_of(spark: SparkValue) -> Self {
        match spark {
            SparkValue::Finite(s) => Threshold::Finite(T::from_usize_lossy(s) / T::lit(2.0)),
            SparkValue::Infinite => Threshold::Infinite,
        }
    }
}

/// Uniqueness criteria, strongest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Criterion {
    Spark,
    Gamma,
    MutualCoherence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    UniqueBySpark,
    UniqueByGamma,
    UniqueByMc,
    Inconclusive,
    NotASolution,
}

impl Verdict {
    pub fn is_unique(self) -> bool {
        matches!(self, Verdict::UniqueBySpark | Verdict::UniqueByGamma | Verdict::UniqueByMc)
    }
}

impl From<Criterion> for Verdict {
    fn from(c: Criterion) -> Self {
        match c {
            Criterion::Spark => Verdict::UniqueBySpark,
            Criterion::Gamma => Verdict::UniqueByGamma,
            Criterion::MutualCoherence => Verdict::UniqueByMc,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct UniquenessCertificate<T> {
    pub l0: usize,
    /// `||Ax - b||_2`.
    pub residual: T,
    /// `spark(A)/2`, absent unless the exact spark was supplied.
    pub spark_threshold: Option<Threshold<T>>,
    /// `(1 + γ(A))/2`.
    pub gamma_threshold: Threshold<T>,
    /// `(1 + 1/μ(A))/2`, absent when `μ(A) = 0`.
    pub mc_threshold: Option<T>,
    pub verdict: Verdict,
    /// Every criterion that passed.
    pub passing: BTreeSet<Criterion>,
}

/// Number of entries with magnitude above `zero_entry_tol`.
pub fn l0_norm<T: Scalar>(x: &[T], cfg: &ToleranceConfig<T>) -> Result<usize> {
    if let Some(i) = x.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFiniteEntry(i));
    }
    Ok(x.iter().filter(|v| v.abs() > cfg.zero_entry_tol).count())
}

/// Checks `x` against `Ax = b` and each available uniqueness criterion.
pub fn certify<T: Scalar>(
    a: &DenseMatrix<T>,
    x: &[T],
    b: &[T],
    cfg: &ToleranceConfig<T>,
    exact_spark: Option<SparkValue>,
) -> Result<UniquenessCertificate<T>> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch { expected: a.rows(), found: b.len() });
    }
    if let Some(i) = b.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFiniteEntry(i));
    }
    let l0 = l0_norm(x, cfg)?;
    let ax = a.mul_vec(x)?;
    let diff: Vec<T> = ax.iter().zip(b).map(|(&p, &q)| p - q).collect();
    let residual = dot(&diff, &diff).sqrt();

    let profile = pairwise_coherences(a, cfg)?;
    let half = T::lit(0.5);
    let gamma_threshold = match profile.gamma {
        Some(g) => Threshold::Finite(T::from_usize_lossy(g + 1) * half),
        None => Threshold::Infinite,
    };
    let mc_threshold = (profile.mu > T::zero()).then(|| (T::one() + profile.mu.recip()) * half);
    let spark_threshold = exact_spark.map(Threshold::half_of);

    let mut passing = BTreeSet::new();
    let is_solution = residual <= cfg.residual_tol;
    if is_solution {
        if spark_threshold.is_some_and(|t| t.admits(l0)) {
            passing.insert(Criterion::Spark);
        }
        if gamma_threshold.admits(l0) {
            passing.insert(Criterion::Gamma);
        }
        if mc_threshold.is_some_and(|t| Threshold::Finite(t).admits(l0)) {
            passing.insert(Criterion::MutualCoherence);
        }
    }
    let verdict =
        if !is_solution { Verdict::NotASolution } else { passing.first().map_or(Verdict::Inconclusive, |&c| c.into()) };
    Ok(UniquenessCertificate { l0, residual, spark_threshold, gamma_threshold, mc_threshold, verdict, passing })
}

/// Solutions of minimal sparsity found by exhaustive support search.
#[derive(Debug, Clone, PartialEq)]
pub struct SparsestSolutions<T> {
    pub sparsity: usize,
    /// `(support, x)` pairs with `x` of length `m`, supports in lexicographic order.
    pub solutions: Vec<(Vec<usize>, Vec<T>)>,
    pub supports_examined: u64,
}

/// Brute-force `min ||x||_0 s.t. Ax = b` over supports of size at most `k_max`.
///
/// A support is accepted when the least-squares fit on its columns leaves a
/// residual within `residual_tol` and every coefficient exceeds
/// `zero_entry_tol` in magnitude. All accepted supports of the smallest
/// feasible size are returned.
pub fn sparsest_oracle<T: Scalar>(
    a: &DenseMatrix<T>,
    b: &[T],
    k_max: usize,
    cfg: &ToleranceConfig<T>,
    budget: u64,
) -> Result<SparsestSolutions<T>> {
    let m = a.cols();
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch { expected: a.rows(), found: b.len() });
    }
    let columns = a.columns();
    let mut examined: u64 = 0;
    for k in 0..=k_max.min(m) {
        let mut solutions = Vec::new();
        for support in Combinations::new(m, k) {
            if examined >= budget {
                return Err(Error::BudgetExceeded(examined));
            }
            examined += 1;
            let picked: Vec<&[T]> = support.iter().map(|&i| columns[i].as_slice()).collect();
            let fit = if k == 0 {
                Some((Vec::new(), dot(b, b).sqrt()))
            } else {
                least_squares(&picked, b, cfg.rank_tol_factor)
            };
            let Some((coeffs, residual)) = fit else { continue };
            if residual <= cfg.residual_tol && coeffs.iter().all(|c| c.abs() > cfg.zero_entry_tol) {
                let mut x = vec![T::zero(); m];
                for (&i, &c) in support.iter().zip(&coeffs) {
                    x[i] = c;
                }
                solutions.push((support, x));
            }
        }
        if !solutions.is_empty() {
            return Ok(SparsestSolutions { sparsity: k, solutions, supports_examined: examined });
        }
    }
    Err(Error::NoSolutionWithinKmax(k_max))
}
