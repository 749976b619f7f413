//! JSON/text analysis report (schema version 1).
//!
//! Infinite values are written as `{"kind": "infinite", "value": "infinity"}`
//! so the output stays standard JSON.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use spark_cert::{
    lemma31_sum, pairwise_coherences, Certificate, Criterion, Matrix, Profile, Report, SparkValue, Threshold,
    Tolerances, Verdict,
};

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
const TOP_COHERENCES: usize = 10;

/// Marker rendered as the JSON string `"infinity"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Infinity;

impl Serialize for Infinity {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str("infinity")
    }
}

impl<'de> Deserialize<'de> for Infinity {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        if s == "infinity" {
            Ok(Infinity)
        } else {
            Err(serde::de::Error::custom(format!("expected \"infinity\", found {s:?}")))
        }
    }
}

/// An integer that may be infinite or not computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum CountField {
    Finite(usize),
    Infinite(Infinity),
    NotComputed,
}

impl From<SparkValue> for CountField {
    fn from(v: SparkValue) -> Self {
        match v {
            SparkValue::Finite(k) => CountField::Finite(k),
            SparkValue::Infinite => CountField::Infinite(Infinity),
        }
    }
}

impl From<Option<SparkValue>> for CountField {
    fn from(v: Option<SparkValue>) -> Self {
        v.map_or(CountField::NotComputed, Into::into)
    }
}

impl fmt::Display for CountField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountField::Finite(k) => write!(f, "{k}"),
            CountField::Infinite(_) => f.write_str("infinity"),
            CountField::NotComputed => f.write_str("not computed"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum ThresholdField {
    Finite(f64),
    Infinite(Infinity),
}

impl From<Threshold<f64>> for ThresholdField {
    fn from(t: Threshold<f64>) -> Self {
        match t {
            Threshold::Finite(v) => ThresholdField::Finite(v),
            Threshold::Infinite => ThresholdField::Infinite(Infinity),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixMeta {
    pub rows: usize,
    pub cols: usize,
    /// File path, `stdin`, or a generator tag.
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ToleranceEcho {
    pub zero_col_tol: f64,
    pub rank_tol_factor: f64,
    pub zero_entry_tol: f64,
    pub residual_tol: f64,
    pub gamma_slack: f64,
}

impl From<&Tolerances> for ToleranceEcho {
    fn from(c: &Tolerances) -> Self {
        Self {
            zero_col_tol: c.zero_col_tol,
            rank_tol_factor: c.rank_tol_factor,
            zero_entry_tol: c.zero_entry_tol,
            residual_tol: c.residual_tol,
            gamma_slack: c.gamma_slack,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoherenceSummary {
    pub mu: f64,
    pub gamma: CountField,
    pub pair_count: usize,
    /// Up to ten largest pairwise coherences.
    pub top_coherences: Vec<f64>,
    /// Sum of the `rows` largest coherences, only for `rows < cols`.
    pub lemma31_sum: Option<f64>,
}

impl CoherenceSummary {
    fn new(a: &Matrix, profile: &Profile, cfg: &Tolerances) -> Self {
        Self {
            mu: profile.mu,
            gamma: profile.gamma.map(SparkValue::Finite).unwrap_or(SparkValue::Infinite).into(),
            pair_count: profile.pair_count(),
            top_coherences: profile.sorted_mu.iter().take(TOP_COHERENCES).copied().collect(),
            lemma31_sum: lemma31_sum(a, cfg).ok(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SparkSummary {
    pub classic_bound: Option<f64>,
    pub gamma_bound: CountField,
    pub exact: CountField,
    pub witness: Option<Vec<usize>>,
    pub trivial_upper: Option<usize>,
    pub search_budget_hit: bool,
    pub subsets_examined: u64,
    pub budget: u64,
}

impl SparkSummary {
    pub fn new(r: &Report, budget: u64) -> Self {
        Self {
            classic_bound: r.classic_bound,
            gamma_bound: r.gamma_bound.into(),
            exact: r.exact.into(),
            witness: r.witness.clone(),
            trivial_upper: r.trivial_upper,
            search_budget_hit: r.search_budget_hit,
            subsets_examined: r.subsets_examined,
            budget,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictField {
    UniqueBySpark,
    UniqueByGamma,
    UniqueByMc,
    Inconclusive,
    NotASolution,
}

impl From<Verdict> for VerdictField {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::UniqueBySpark => VerdictField::UniqueBySpark,
            Verdict::UniqueByGamma => VerdictField::UniqueByGamma,
            Verdict::UniqueByMc => VerdictField::UniqueByMc,
            Verdict::Inconclusive => VerdictField::Inconclusive,
            Verdict::NotASolution => VerdictField::NotASolution,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateSummary {
    pub l0: usize,
    pub residual: f64,
    pub spark_threshold: Option<ThresholdField>,
    pub gamma_threshold: ThresholdField,
    pub mc_threshold: Option<f64>,
    pub verdict: VerdictField,
    /// Passing criteria among `spark`, `gamma`, `mc`, strongest first.
    pub passing: Vec<String>,
}

impl From<&Certificate> for CertificateSummary {
    fn from(c: &Certificate) -> Self {
        Self {
            l0: c.l0,
            residual: c.residual,
            spark_threshold: c.spark_threshold.map(Into::into),
            gamma_threshold: c.gamma_threshold.into(),
            mc_threshold: c.mc_threshold,
            verdict: c.verdict.into(),
            passing: c
                .passing
                .iter()
                .map(|p| match p {
                    Criterion::Spark => "spark",
                    Criterion::Gamma => "gamma",
                    Criterion::MutualCoherence => "mc",
                })
                .map(String::from)
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub tool_version: String,
    pub matrix: MatrixMeta,
    pub seed: Option<u64>,
    pub tolerances: ToleranceEcho,
    pub coherence: CoherenceSummary,
    pub spark: SparkSummary,
    pub certificate: Option<CertificateSummary>,
}

impl AnalysisReport {
    /// Builds a report from a finished spark analysis.
    pub fn new(a: &Matrix, source: &str, cfg: &Tolerances, spark: &Report, budget: u64) -> spark_cert::Result<Self> {
        let profile = pairwise_coherences(a, cfg)?;
        Ok(Self {
            schema_version: SCHEMA_VERSION,
            tool_version: TOOL_VERSION.to_string(),
            matrix: MatrixMeta { rows: a.rows(), cols: a.cols(), source: source.to_string() },
            seed: None,
            tolerances: cfg.into(),
            coherence: CoherenceSummary::new(a, &profile, cfg),
            spark: SparkSummary::new(spark, budget),
            certificate: None,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Human-readable rendering; reals with 17 significant digits.
    pub fn to_text(&self) -> String {
        let num = |v: f64| format!("{v:.16e}");
        let opt = |v: Option<f64>| v.map_or_else(|| "absent".to_string(), num);
        let mut s = String::new();
        let m = &self.matrix;
        let _ = writeln!(s, "matrix            {} x {} ({})", m.rows, m.cols, m.source);
        if let Some(seed) = self.seed {
            let _ = writeln!(s, "seed              {seed}");
        }
        let c = &self.coherence;
        let _ = writeln!(s, "mu                {}", num(c.mu));
        let _ = writeln!(s, "gamma             {}", c.gamma);
        let top: Vec<String> = c.top_coherences.iter().map(|&v| num(v)).collect();
        let _ = writeln!(s, "top coherences    [{}]", top.join(", "));
        let _ = writeln!(s, "lemma31 sum       {}", opt(c.lemma31_sum));
        let sp = &self.spark;
        let _ = writeln!(s, "classic bound     {}", opt(sp.classic_bound));
        let _ = writeln!(s, "gamma bound       {}", sp.gamma_bound);
        let _ = writeln!(s, "exact spark       {}", sp.exact);
        if let Some(w) = &sp.witness {
            let _ = writeln!(s, "witness columns   {w:?}");
        }
        if let Some(u) = sp.trivial_upper {
            let _ = writeln!(s, "trivial upper     {u}");
        }
        if sp.search_budget_hit {
            let _ = writeln!(s, "search budget hit after {} subsets", sp.subsets_examined);
        }
        if let Some(cert) = &self.certificate {
            let th = |t: &ThresholdField| match t {
                ThresholdField::Finite(v) => num(*v),
                ThresholdField::Infinite(_) => "infinity".to_string(),
            };
            let _ = writeln!(s, "l0                {}", cert.l0);
            let _ = writeln!(s, "residual          {}", num(cert.residual));
            let spark_t = cert.spark_threshold.as_ref().map_or_else(|| "absent".to_string(), th);
            let _ = writeln!(s, "spark threshold   {spark_t}");
            let _ = writeln!(s, "gamma threshold   {}", th(&cert.gamma_threshold));
            let _ = writeln!(s, "mc threshold      {}", opt(cert.mc_threshold));
            let _ = writeln!(s, "verdict           {:?}", cert.verdict);
            let _ = writeln!(s, "passing           [{}]", cert.passing.join(", "));
        }
        s
    }
}
