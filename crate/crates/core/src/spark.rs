//! Spark lower bounds, exhaustive spark search and the Gershgorin predicate.

use rayon::prelude::*;

use crate::coherence::{mutual_coherence, pairwise_coherences};
use crate::error::{Error, Result};
use crate::linalg::rank_of_columns;
use crate::matrix::DenseMatrix;
use crate::scalar::Scalar;
use crate::subsets::Combinations;
use crate::tolerance::ToleranceConfig;

/// Subsets examined before an exhaustive search gives up.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

const BLOCK: usize = 4096;

/// The spark of a matrix, or a bound on it, which may be infinite.
///
/// `Finite(_)` orders below `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SparkValue {
    Finite(usize),
    Infinite,
}

impl SparkValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            SparkValue::Finite(v) => Some(v),
            SparkValue::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == SparkValue::Infinite
    }

    /// `self >= x` with `Infinite` above every real.
    pub fn at_least<T: Scalar>(self, x: T) -> bool {
        match self {
            SparkValue::Finite(v) => T::from_usize_lossy(v) >= x,
            SparkValue::Infinite => true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub budget: u64,
    /// Test the subsets of each size on the rayon pool. Results are identical
    /// to the serial search.
    pub parallel: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { budget: DEFAULT_BUDGET, parallel: true }
    }
}

impl SearchOptions {
    pub fn serial(budget: u64) -> Self {
        Self { budget, parallel: false }
    }
}

/// Outcome of an exhaustive spark search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactSpark {
    pub value: SparkValue,
    /// Lexicographically smallest dependent subset of minimal size.
    pub witness: Option<Vec<usize>>,
    pub subsets_examined: u64,
}

/// Spark bounds for one matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SparkReport<T> {
    /// `1 + 1/μ(A)`, absent when `μ(A) = 0`.
    pub classic_bound: Option<T>,
    /// `1 + γ(A)`, infinite when no coherence prefix sum reaches one.
    pub gamma_bound: SparkValue,
    /// Exact spark, `None` when not requested or the budget ran out.
    pub exact: Option<SparkValue>,
    pub witness: Option<Vec<usize>>,
    /// `n + 1`, present only for `n < m`.
    pub trivial_upper: Option<usize>,
    pub search_budget_hit: bool,
    pub subsets_examined: u64,
}

impl<T: Scalar> SparkReport<T> {
    /// Checks the bound chain `exact >= 1 + γ >= 1 + 1/μ` and `exact <= n + 1`.
    pub fn is_consistent(&self) -> bool {
        let gamma_vs_classic = match (self.gamma_bound, self.classic_bound) {
            (SparkValue::Finite(g), Some(c)) => T::from_usize_lossy(g) >= c,
            _ => true,
        };
        let exact_ok = match self.exact {
            Some(e) => {
                e >= self.gamma_bound
                    && self.classic_bound.is_none_or(|c| e.at_least(c))
                    && self.trivial_upper.is_none_or(|u| e <= SparkValue::Finite(u))
            }
            None => true,
        };
        let infinite_ok = !self.gamma_bound.is_infinite() || self.exact.is_none_or(|e| e.is_infinite());
        gamma_vs_classic && exact_ok && infinite_ok
    }
}

/// `1 + 1/μ(A)`; `None` when the columns are mutually orthogonal.
pub fn classic_lower_bound<T: Scalar>(a: &DenseMatrix<T>) -> Result<Option<T>> {
    let mu = mutual_coherence(a)?;
    Ok((mu > T::zero()).then(|| T::one() + mu.recip()))
}

/// `1 + γ(A)`, or `Infinite` when the coherences sum to less than one, in
/// which case the columns are independent and the spark is infinite.
pub fn gamma_lower_bound<T: Scalar>(a: &DenseMatrix<T>, cfg: &ToleranceConfig<T>) -> Result<SparkValue> {
    let profile = pairwise_coherences(a, cfg)?;
    Ok(match profile.gamma {
        Some(g) => SparkValue::Finite(g + 1),
        None => SparkValue::Infinite,
    })
}

/// Smallest number of linearly dependent columns, by exhaustive search.
///
/// Sizes are tried in increasing order and subsets lexicographically within a
/// size; the first subset whose numerical rank is below its size is the
/// witness. The budget counts subsets in that order, so the serial and
/// parallel searches report the same result and the same error.
pub fn exact_spark<T: Scalar>(a: &DenseMatrix<T>, cfg: &ToleranceConfig<T>, opts: SearchOptions) -> Result<ExactSpark> {
    let rows = a.rows();
    let m = a.cols();
    let columns = a.normalize_columns().columns();
    let factor = cfg.rank_tol_factor;

    let all: Vec<&[T]> = columns.iter().map(Vec::as_slice).collect();
    if rank_of_columns(&all, rows, factor) == m {
        return Ok(ExactSpark { value: SparkValue::Infinite, witness: None, subsets_examined: 0 });
    }

    let dependent = |subset: &Vec<usize>| {
        let picked: Vec<&[T]> = subset.iter().map(|&k| columns[k].as_slice()).collect();
        rank_of_columns(&picked, rows, factor) < subset.len()
    };

    let mut examined: u64 = 0;
    for k in 1..=m {
        let mut combos = Combinations::new(m, k);
        loop {
            let remaining = opts.budget.saturating_sub(examined);
            let take = (BLOCK as u64).min(remaining) as usize;
            let block: Vec<Vec<usize>> = combos.by_ref().take(take).collect();
            if block.is_empty() {
                if remaining == 0 && combos.next().is_some() {
                    return Err(Error::BudgetExceeded(examined));
                }
                break;
            }
            let hit = if opts.parallel {
                block.par_iter().position_first(dependent)
            } else {
                block.iter().position(dependent)
            };
            if let Some(pos) = hit {
                examined += pos as u64 + 1;
                return Ok(ExactSpark {
                    value: SparkValue::Finite(k),
                    witness: Some(block[pos].clone()),
                    subsets_examined: examined,
                });
            }
            examined += block.len() as u64;
        }
    }
    // only reachable when every subset passed but the full rank test did not
    Ok(ExactSpark { value: SparkValue::Infinite, witness: None, subsets_examined: examined })
}

/// Classic bound, coherence-index bound and optionally the exact spark.
///
/// A search that runs out of budget is reported through `search_budget_hit`
/// rather than as an error.
pub fn analyze_spark<T: Scalar>(
    a: &DenseMatrix<T>,
    cfg: &ToleranceConfig<T>,
    compute_exact: bool,
    opts: SearchOptions,
) -> Result<SparkReport<T>> {
    let profile = pairwise_coherences(a, cfg)?;
    let classic_bound = (profile.mu > T::zero()).then(|| T::one() + profile.mu.recip());
    let gamma_bound = match profile.gamma {
        Some(g) => SparkValue::Finite(g + 1),
        None => SparkValue::Infinite,
    };
    let trivial_upper = (a.rows() < a.cols()).then_some(a.rows() + 1);
    let mut report = SparkReport {
        classic_bound,
        gamma_bound,
        exact: None,
        witness: None,
        trivial_upper,
        search_budget_hit: false,
        subsets_examined: 0,
    };
    if compute_exact {
        match exact_spark(a, cfg, opts) {
            Ok(found) => {
                report.exact = Some(found.value);
                report.witness = found.witness;
                report.subsets_examined = found.subsets_examined;
            }
            Err(Error::BudgetExceeded(n)) => {
                report.search_budget_hit = true;
                report.subsets_examined = n;
            }
            Err(e) => return Err(e),
        }
    }
    Ok(report)
}

/// Strict row diagonal dominance of a unit-diagonal symmetric matrix.
///
/// For such a matrix this implies positive definiteness (every Gershgorin
/// disc lies in the open right half-plane), so a diagonally dominant Gram
/// minor certifies that its columns are independent.
pub fn is_diagonally_dominant<T: Scalar>(g: &DenseMatrix<T>) -> Result<bool> {
    let p = g.rows();
    if g.cols() != p {
        return Err(Error::NotSquare { rows: p, cols: g.cols() });
    }
    let tol = T::lit(1e-12);
    if let Some(i) = (0..p).find(|&i| (g.get(i, i) - T::one()).abs() > tol) {
        return Err(Error::NotUnitDiagonal(i));
    }
    Ok((0..p).all(|i| {
        let off: T = (0..p).filter(|&j| j != i).map(|j| g.get(i, j).abs()).sum();
        off < g.get(i, i)
    }))
}
