use std::process::ExitCode;

fn main() -> ExitCode {
    winding_cli::cli::run(std::env::args_os())
}
