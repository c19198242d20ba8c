use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use g2crit_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(report.emit(cli.format).as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(report.status.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
