use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(invline_cli::run(std::env::args_os()) as u8)
}
