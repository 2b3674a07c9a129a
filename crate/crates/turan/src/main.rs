use std::process::ExitCode;

fn main() -> ExitCode {
    turan::cli::run(std::env::args())
}
