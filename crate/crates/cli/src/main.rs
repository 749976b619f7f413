use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let code = spark_cert_cli::run(
        std::env::args_os(),
        &mut io::stdin().lock(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
        std::env::var(spark_cert_cli::cli::BUDGET_ENV).ok(),
    );
    ExitCode::from(code as u8)
}
