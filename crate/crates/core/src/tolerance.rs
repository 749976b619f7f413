use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Every numerical threshold used by the analysis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceConfig<T> {
    /// Columns with Euclidean norm at or below this are rejected as zero.
    pub zero_col_tol: T,
    /// Relative cutoff factor for numerical rank; multiplied by the largest
    /// pivot and by `max(rows, cols)`.
    pub rank_tol_factor: T,
    /// Entries with magnitude at or below this do not count towards `||x||_0`.
    pub zero_entry_tol: T,
    /// Largest residual `||Ax - b||_2` accepted as a solution.
    pub residual_tol: T,
    /// A coherence prefix sum counts as reaching one when it is `>= 1 - gamma_slack`.
    pub gamma_slack: T,
}

impl<T: Scalar> Default for ToleranceConfig<T> {
    fn default() -> Self {
        Self {
            zero_col_tol: T::lit(T::ZERO_COL_TOL),
            rank_tol_factor: T::epsilon(),
            zero_entry_tol: T::lit(T::ZERO_ENTRY_TOL),
            residual_tol: T::lit(T::RESIDUAL_TOL),
            gamma_slack: T::lit(T::GAMMA_SLACK),
        }
    }
}

impl<T: Scalar> ToleranceConfig<T> {
    /// Checks finiteness and the sign constraint of each field.
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("zero_col_tol", self.zero_col_tol),
            ("rank_tol_factor", self.rank_tol_factor),
            ("residual_tol", self.residual_tol),
        ];
        for (name, v) in positive {
            if !v.is_finite() || v <= T::zero() {
                return Err(Error::InvalidTolerance(name));
            }
        }
        let non_negative = [("zero_entry_tol", self.zero_entry_tol), ("gamma_slack", self.gamma_slack)];
        for (name, v) in non_negative {
            if !v.is_finite() || v < T::zero() {
                return Err(Error::InvalidTolerance(name));
            }
        }
        Ok(())
    }

    pub fn with_gamma_slack(mut self, slack: T) -> Self {
        self.gamma_slack = slack;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        let cfg = ToleranceConfig::<f64>::default();
        cfg.validate().unwrap();
        assert_eq!(cfg.zero_col_tol, 1e-12);
        assert_eq!(cfg.zero_entry_tol, 1e-9);
        assert_eq!(cfg.residual_tol, 1e-9);
        assert_eq!(cfg.rank_tol_factor, f64::EPSILON);
        ToleranceConfig::<f32>::default().validate().unwrap();
    }

    #[test]
    fn rejects_bad_fields() {
        let cfg = ToleranceConfig::<f64> { residual_tol: 0.0, ..Default::default() };
        assert_eq!(cfg.validate(), Err(Error::InvalidTolerance("residual_tol")));
        let cfg = ToleranceConfig::<f64>::default().with_gamma_slack(-1.0);
        assert_eq!(cfg.validate(), Err(Error::InvalidTolerance("gamma_slack")));
        let cfg = ToleranceConfig::<f64> { zero_entry_tol: f64::NAN, ..Default::default() };
        assert!(cfg.validate().is_err());
    }
}
