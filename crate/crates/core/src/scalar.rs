//! Floating-point scalar abstraction shared by every numerical routine.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Real scalar the analysis is generic over.
///
/// The associated constants are the default tolerances for the precision;
/// they seed [`crate::ToleranceConfig::default`].
pub trait Scalar: Float + FromPrimitive + ToPrimitive + Sum + Debug + Display + Send + Sync + 'static {
    const ZERO_COL_TOL: f64;
    const ZERO_ENTRY_TOL: f64;
    const RESIDUAL_TOL: f64;
    const GAMMA_SLACK: f64;

    /// Lossy conversion from an `f64` literal.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    fn from_usize_lossy(x: usize) -> Self {
        Self::from_usize(x).expect("usize representable")
    }
}

impl Scalar for f64 {
    const ZERO_COL_TOL: f64 = 1e-12;
    const ZERO_ENTRY_TOL: f64 = 1e-9;
    const RESIDUAL_TOL: f64 = 1e-9;
    const GAMMA_SLACK: f64 = 1e-12;
}

impl Scalar for f32 {
    const ZERO_COL_TOL: f64 = 1e-6;
    const ZERO_ENTRY_TOL: f64 = 1e-4;
    const RESIDUAL_TOL: f64 = 1e-4;
    const GAMMA_SLACK: f64 = 1e-5;
}
