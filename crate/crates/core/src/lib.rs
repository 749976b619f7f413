//! Lower bounds on the spark of a matrix from its column coherences, an exact
//! spark search to check them against, and uniqueness certificates for sparse
//! solutions of `Ax = b`.
//!
//! Everything is generic over [`Scalar`] (`f32` or `f64`); the aliases below
//! fix the scalar to `f64`.

pub mod coherence;
pub mod error;
pub mod generate;
pub mod linalg;
pub mod matrix;
pub mod scalar;
pub mod spark;
pub mod subsets;
pub mod tolerance;
pub mod uniqueness;

pub use coherence::{coherence_index, lemma31_sum, mutual_coherence, pairwise_coherences, CoherenceProfile};
pub use error::{Error, Result};
pub use matrix::DenseMatrix;
pub use scalar::Scalar;
pub use spark::{
    analyze_spark, classic_lower_bound, exact_spark, gamma_lower_bound, is_diagonally_dominant, ExactSpark,
    SearchOptions, SparkReport, SparkValue, DEFAULT_BUDGET,
};
pub use tolerance::ToleranceConfig;
pub use uniqueness::{
    certify, l0_norm, sparsest_oracle, Criterion, SparsestSolutions, Threshold, UniquenessCertificate, Verdict,
};

pub type Matrix = DenseMatrix<f64>;
pub type Tolerances = ToleranceConfig<f64>;
pub type Profile = CoherenceProfile<f64>;
pub type Report = SparkReport<f64>;
pub type Certificate = UniquenessCertificate<f64>;
pub type Solutions = SparsestSolutions<f64>;

pub type Matrix32 = DenseMatrix<f32>;
pub type Tolerances32 = ToleranceConfig<f32>;
