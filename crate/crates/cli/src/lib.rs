//! Matrix file formats, analysis reports and the `spark-cert` command line.

pub mod bench;
pub mod cli;
pub mod formats;
pub mod report;

pub use cli::run;
pub use formats::{parse_csv, parse_matrix_market, parse_vector, FormatError, MatrixFormat};
pub use report::AnalysisReport;
