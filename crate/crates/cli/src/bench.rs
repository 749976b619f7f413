//! Spark, coherence-index bound and classic bound for the golden example family.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use spark_cert::{analyze_spark, generate, Result, SearchOptions, SparkValue, Tolerances};

use crate::report::CountField;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub n: usize,
    pub exact_spark: CountField,
    pub gamma_bound: CountField,
    pub classic_bound: Option<f64>,
    /// `2 + ⌈√(n−1)/3⌉`.
    pub closed_form_gamma_bound: usize,
    /// `n + 1`.
    pub closed_form_spark: usize,
}

impl BenchRow {
    /// Whether the computed values agree with the closed forms.
    pub fn matches_closed_form(&self) -> bool {
        self.exact_spark == CountField::Finite(self.closed_form_spark)
            && self.gamma_bound == CountField::Finite(self.closed_form_gamma_bound)
            && self.classic_bound.is_some_and(|c| (c - 2.25).abs() <= 1e-12)
    }
}

/// `2 + ⌈√(n−1)/3⌉` in integer arithmetic: the smallest `t` with `9t² >= n − 1`.
pub fn closed_form_gamma_bound(n: usize) -> usize {
    let target = n.saturating_sub(1);
    let t = (0..).find(|&t: &usize| 9 * t * t >= target).unwrap_or(0);
    2 + t
}

pub fn bench_example31(ns: &[usize], cfg: &Tolerances, opts: SearchOptions) -> Result<Vec<BenchRow>> {
    ns.iter()
        .map(|&n| {
            let a = generate::example31::<f64>(n)?;
            let r = analyze_spark(&a, cfg, true, opts)?;
            if r.search_budget_hit {
                return Err(spark_cert::Error::BudgetExceeded(r.subsets_examined));
            }
            Ok(BenchRow {
                n,
                exact_spark: r.exact.unwrap_or(SparkValue::Infinite).into(),
                gamma_bound: r.gamma_bound.into(),
                classic_bound: r.classic_bound,
                closed_form_gamma_bound: closed_form_gamma_bound(n),
                closed_form_spark: n + 1,
            })
        })
        .collect()
}

pub fn render_table(rows: &[BenchRow]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:>4}  {:>11}  {:>7}  {:>22}  {:>13}  {:>4}  {:>5}",
        "n", "exact_spark", "1+gamma", "1+1/mu", "2+ceil(r/3)", "n+1", "match"
    );
    for r in rows {
        let classic = r.classic_bound.map_or_else(|| "absent".into(), |c| format!("{c:.16e}"));
        let _ = writeln!(
            s,
            "{:>4}  {:>11}  {:>7}  {:>22}  {:>13}  {:>4}  {:>5}",
            r.n,
            r.exact_spark.to_string(),
            r.gamma_bound.to_string(),
            classic,
            r.closed_form_gamma_bound,
            r.closed_form_spark,
            if r.matches_closed_form() { "yes" } else { "NO" }
        );
    }
    s
}
