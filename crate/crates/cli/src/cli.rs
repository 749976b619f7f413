//! Command-line front end.
//!
//! Exit codes: 0 success, 1 input error, 2 subset budget exceeded,
//! 3 the candidate passed to `certify` does not solve `Ax = b`.

use std::fs;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use spark_cert::{analyze_spark, certify, generate, Matrix, SearchOptions, Tolerances, Verdict, DEFAULT_BUDGET};

use crate::bench::{bench_example31, render_table};
use crate::formats::{parse_matrix, parse_vector, write_csv, write_matrix_market, FormatError, MatrixFormat};
use crate::report::{AnalysisReport, CertificateSummary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_NOT_A_SOLUTION: i32 = 3;

/// Environment variable overriding the default subset budget.
pub const BUDGET_ENV: &str = "SPARK_CERT_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "spark-cert", version, about = "Spark lower bounds and sparse-solution uniqueness certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Coherence profile and spark bounds of a matrix file (`-` for stdin).
    Analyze {
        file: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Uniqueness certificate for a candidate solution of Ax = b.
    Certify {
        matrix: String,
        #[arg(long = "x")]
        x: String,
        #[arg(long = "b")]
        b: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Write a generated matrix.
    Gen {
        #[command(subcommand)]
        which: GenCommand,
    },
    /// Tabulate spark and bounds for a matrix family.
    Bench {
        #[command(subcommand)]
        which: BenchCommand,
    },
}

#[derive(Debug, Args)]
struct CommonArgs {
    #[arg(long, value_enum)]
    format: Option<MatrixFormat>,
    /// Run the exhaustive spark search.
    #[arg(long)]
    exact: bool,
    /// Maximum number of column subsets the search may examine.
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long, conflicts_with = "text")]
    json: bool,
    #[arg(long)]
    text: bool,
    /// Search subsets on a single thread.
    #[arg(long)]
    serial: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutFormat {
    Csv,
    #[value(name = "mm")]
    MatrixMarket,
}

#[derive(Debug, Subcommand)]
enum GenCommand {
    /// Identity block plus the unit column (0.8, 0.6/sqrt(n-1), ...).
    Example31 {
        #[arg(long)]
        n: usize,
        #[arg(short = 'o', long = "output")]
        output: Option<String>,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutFormat,
    },
    /// Seeded standard normal entries.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        seed: u64,
        #[arg(short = 'o', long = "output")]
        output: Option<String>,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutFormat,
    },
}

#[derive(Debug, Subcommand)]
enum BenchCommand {
    Example31 {
        #[arg(long = "n-list", value_delimiter = ',', default_values_t = vec![2usize, 5, 10, 17])]
        n_list: Vec<usize>,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
    },
}

/// A failure with the exit code it maps to.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self { code: EXIT_INPUT, message: message.into() }
    }
}

fn lib_failure(context: &str, e: spark_cert::Error) -> Failure {
    let code = match e {
        spark_cert::Error::BudgetExceeded(_) => EXIT_BUDGET,
        _ => EXIT_INPUT,
    };
    Failure { code, message: format!("{context}: {e}") }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    budget_env: Option<String>,
}

impl Io<'_> {
    fn read_source(&mut self, path: &str) -> Result<String, Failure> {
        if path == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s).map_err(|e| Failure::input(format!("stdin: {e}")))?;
            Ok(s)
        } else {
            fs::read_to_string(path).map_err(|e| Failure::input(format!("{path}: {e}")))
        }
    }

    fn emit(&mut self, text: &str, output: Option<&str>) -> Result<(), Failure> {
        match output {
            Some(path) => fs::write(path, text).map_err(|e| Failure::input(format!("{path}: {e}"))),
            None => self.stdout.write_all(text.as_bytes()).map_err(|e| Failure::input(format!("stdout: {e}"))),
        }
    }

    fn budget(&self, flag: Option<u64>) -> Result<u64, Failure> {
        if let Some(b) = flag {
            return Ok(b);
        }
        match &self.budget_env {
            Some(v) => {
                v.trim().parse().map_err(|_| Failure::input(format!("{BUDGET_ENV}: not a non-negative integer: {v:?}")))
            }
            None => Ok(DEFAULT_BUDGET),
        }
    }
}

fn source_label(path: &str) -> String {
    if path == "-" {
        "stdin".to_string()
    } else {
        path.to_string()
    }
}

fn load_matrix(io: &mut Io<'_>, path: &str, format: Option<MatrixFormat>, cfg: &Tolerances) -> Result<Matrix, Failure> {
    let text = io.read_source(path)?;
    let format = format.unwrap_or_else(|| MatrixFormat::detect(path, &text));
    parse_matrix(&text, format, cfg).map_err(|e: FormatError| Failure::input(format!("{}: {e}", source_label(path))))
}

fn load_vector(io: &mut Io<'_>, path: &str) -> Result<Vec<f64>, Failure> {
    let text = io.read_source(path)?;
    parse_vector(&text).map_err(|e| Failure::input(format!("{}: {e}", source_label(path))))
}

fn render(report: &AnalysisReport, json: bool) -> String {
    if json {
        let mut s = report.to_json();
        s.push('\n');
        s
    } else {
        report.to_text()
    }
}

/// Spark analysis shared by `analyze` and `certify`.
fn analysis(
    a: &Matrix,
    path: &str,
    cfg: &Tolerances,
    common: &CommonArgs,
    io: &Io<'_>,
) -> Result<AnalysisReport, Failure> {
    let budget = io.budget(common.budget)?;
    let opts = SearchOptions { budget, parallel: !common.serial };
    let label = source_label(path);
    let spark = analyze_spark(a, cfg, common.exact, opts).map_err(|e| lib_failure(&label, e))?;
    AnalysisReport::new(a, &label, cfg, &spark, budget).map_err(|e| lib_failure(&label, e))
}

fn execute(cli: Cli, io: &mut Io<'_>) -> Result<i32, Failure> {
    let cfg = Tolerances::default();
    match cli.command {
        Command::Analyze { file, common } => {
            let a = load_matrix(io, &file, common.format, &cfg)?;
            let report = analysis(&a, &file, &cfg, &common, io)?;
            io.emit(&render(&report, common.json), None)?;
            Ok(if report.spark.search_budget_hit { EXIT_BUDGET } else { EXIT_OK })
        }
        Command::Certify { matrix, x, b, common } => {
            let a = load_matrix(io, &matrix, common.format, &cfg)?;
            let xv = load_vector(io, &x)?;
            let bv = load_vector(io, &b)?;
            let mut report = analysis(&a, &matrix, &cfg, &common, io)?;
            let exact = match report.spark.exact {
                crate::report::CountField::Finite(k) => Some(spark_cert::SparkValue::Finite(k)),
                crate::report::CountField::Infinite(_) => Some(spark_cert::SparkValue::Infinite),
                crate::report::CountField::NotComputed => None,
            };
            let cert = certify(&a, &xv, &bv, &cfg, exact).map_err(|e| lib_failure(&format!("{x}, {b}"), e))?;
            report.certificate = Some(CertificateSummary::from(&cert));
            io.emit(&render(&report, common.json), None)?;
            Ok(if cert.verdict == Verdict::NotASolution {
                EXIT_NOT_A_SOLUTION
            } else if report.spark.search_budget_hit {
                EXIT_BUDGET
            } else {
                EXIT_OK
            })
        }
        Command::Gen { which } => {
            let (a, output, format) = match which {
                GenCommand::Example31 { n, output, format } => {
                    let a = generate::example31::<f64>(n).map_err(|e| lib_failure("example31", e))?;
                    (a, output, format)
                }
                GenCommand::Random { n, m, seed, output, format } => {
                    if n == 0 || m == 0 {
                        return Err(Failure::input("random: --n and --m must be positive"));
                    }
                    (generate::random_gaussian::<f64>(n, m, seed, &cfg), output, format)
                }
            };
            let text = match format {
                OutFormat::Csv => write_csv(&a),
                OutFormat::MatrixMarket => write_matrix_market(&a),
            };
            io.emit(&text, output.as_deref())?;
            Ok(EXIT_OK)
        }
        Command::Bench { which: BenchCommand::Example31 { n_list, budget, json } } => {
            let budget = io.budget(budget)?;
            let rows = bench_example31(&n_list, &cfg, SearchOptions { budget, parallel: true })
                .map_err(|e| lib_failure("bench example31", e))?;
            let text = if json {
                let mut s = serde_json::to_string_pretty(&rows).expect("rows serialize");
                s.push('\n');
                s
            } else {
                render_table(&rows)
            };
            io.emit(&text, None)?;
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
    budget_env: Option<String>,
) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                EXIT_INPUT
            } else {
                let _ = stdout.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    let mut io = Io { stdin, stdout, budget_env };
    match execute(cli, &mut io) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}
