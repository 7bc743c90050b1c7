use std::process::ExitCode;

fn main() -> ExitCode {
    proxrem::run_from(std::env::args_os())
}
