use std::io::Write;
use std::process::ExitCode;

use borcherds_rc_explorer::cli::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    let code = match run(cli, &mut stdout) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {}", e);
            2
        }
    };
    let _ = stdout.flush();
    ExitCode::from(code)
}
