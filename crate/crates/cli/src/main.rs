use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use coideal_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, code) = run(&cli);
    if code == 2 {
        eprint!("{out}");
    } else {
        let _ = std::io::stdout().write_all(out.as_bytes());
    }
    ExitCode::from(code as u8)
}
