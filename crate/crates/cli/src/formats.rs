//! Text matrix formats: a plain CSV dialect and Matrix Market `array real general`.

use std::fmt::Write as _;

use spark_cert::{Matrix, Tolerances};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("RaggedRows: line {line} has {found} fields, expected {expected}")]
    RaggedRows { line: usize, expected: usize, found: usize },
    #[error("UnparseableNumber: line {line}, column {col}: {text:?}")]
    UnparseableNumber { line: usize, col: usize, text: String },
    #[error("UnsupportedHeader: {0:?} (only \"%%MatrixMarket matrix array real general\" is supported)")]
    UnsupportedHeader(String),
    #[error("MissingSize: no size line found")]
    MissingSize,
    #[error("TruncatedData: expected {expected} entries, found {found}")]
    TruncatedData { expected: usize, found: usize },
    #[error("ExtraData: line {line}: more than {expected} entries")]
    ExtraData { line: usize, expected: usize },
    #[error("EmptyInput: no data rows")]
    EmptyInput,
    #[error("{0}")]
    Matrix(#[from] spark_cert::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum MatrixFormat {
    Csv,
    #[value(name = "mm")]
    MatrixMarket,
}

impl MatrixFormat {
    /// Picks a format from the file extension, then from the content.
    pub fn detect(path: &str, text: &str) -> Self {
        let lower = path.to_ascii_lowercase();
        if lower.ends_with(".mtx") || lower.ends_with(".mm") || text.trim_start().starts_with("%%MatrixMarket") {
            MatrixFormat::MatrixMarket
        } else {
            MatrixFormat::Csv
        }
    }
}

fn parse_number(field: &str, line: usize, col: usize) -> Result<f64, FormatError> {
    let t = field.trim();
    t.parse::<f64>().map_err(|_| FormatError::UnparseableNumber { line, col, text: t.to_string() })
}

/// One row per line, comma-separated; `#` lines and blank lines are skipped.
/// Line and column numbers in errors are 1-based.
pub fn parse_csv(text: &str, cfg: &Tolerances) -> Result<Matrix, FormatError> {
    let mut width = None;
    let mut rows = 0;
    let mut entries = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        let expected = *width.get_or_insert(fields.len());
        if fields.len() != expected {
            return Err(FormatError::RaggedRows { line: idx + 1, expected, found: fields.len() });
        }
        for (col, f) in fields.iter().enumerate() {
            entries.push(parse_number(f, idx + 1, col + 1)?);
        }
        rows += 1;
    }
    let cols = width.ok_or(FormatError::EmptyInput)?;
    Ok(Matrix::new(rows, cols, entries, cfg)?)
}

/// Dense Matrix Market: header, `%` comments, `rows cols`, then entries in
/// column-major order.
pub fn parse_matrix_market(text: &str, cfg: &Tolerances) -> Result<Matrix, FormatError> {
    let mut lines = text.lines().enumerate();
    let header = lines.next().map(|(_, l)| l.trim()).unwrap_or_default();
    let words: Vec<String> = header.split_whitespace().map(str::to_ascii_lowercase).collect();
    if words != ["%%matrixmarket", "matrix", "array", "real", "general"] {
        return Err(FormatError::UnsupportedHeader(header.to_string()));
    }
    let mut body = lines.filter(|(_, l)| {
        let t = l.trim();
        !t.is_empty() && !t.starts_with('%')
    });

    let (size_idx, size_line) = body.next().ok_or(FormatError::MissingSize)?;
    let dims: Vec<&str> = size_line.split_whitespace().collect();
    let parse_dim = |i: usize| -> Result<usize, FormatError> {
        let t = dims.get(i).ok_or(FormatError::MissingSize)?;
        t.parse().map_err(|_| FormatError::UnparseableNumber { line: size_idx + 1, col: i + 1, text: t.to_string() })
    };
    if dims.len() != 2 {
        return Err(FormatError::MissingSize);
    }
    let (rows, cols) = (parse_dim(0)?, parse_dim(1)?);
    let expected = rows * cols;

    let mut column_major = Vec::with_capacity(expected);
    for (idx, line) in body {
        for (col, tok) in line.split_whitespace().enumerate() {
            if column_major.len() == expected {
                return Err(FormatError::ExtraData { line: idx + 1, expected });
            }
            column_major.push(parse_number(tok, idx + 1, col + 1)?);
        }
    }
    if column_major.len() < expected {
        return Err(FormatError::TruncatedData { expected, found: column_major.len() });
    }
    let mut entries = vec![0.0; expected];
    for (k, v) in column_major.into_iter().enumerate() {
        let (i, j) = (k % rows, k / rows);
        entries[i * cols + j] = v;
    }
    Ok(Matrix::new(rows, cols, entries, cfg)?)
}

pub fn parse_matrix(text: &str, format: MatrixFormat, cfg: &Tolerances) -> Result<Matrix, FormatError> {
    match format {
        MatrixFormat::Csv => parse_csv(text, cfg),
        MatrixFormat::MatrixMarket => parse_matrix_market(text, cfg),
    }
}

/// One number per line; `#` lines and blank lines are skipped.
pub fn parse_vector(text: &str) -> Result<Vec<f64>, FormatError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, l)| parse_number(l, i + 1, 1))
        .collect()
}

/// Shortest round-trip rendering, so re-parsing yields identical bits.
pub fn write_csv(a: &Matrix) -> String {
    let mut out = String::new();
    for row in a.as_slice().chunks_exact(a.cols()) {
        let fields: Vec<String> = row.iter().map(|v| format!("{v:?}")).collect();
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

pub fn write_matrix_market(a: &Matrix) -> String {
    let mut out = String::from("%%MatrixMarket matrix array real general\n");
    let _ = writeln!(out, "{} {}", a.rows(), a.cols());
    for j in 0..a.cols() {
        for i in 0..a.rows() {
            let _ = writeln!(out, "{:?}", a.get(i, j));
        }
    }
    out
}

pub fn write_vector(x: &[f64]) -> String {
    x.iter().map(|v| format!("{v:?}\n")).collect()
}
