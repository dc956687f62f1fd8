use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(cwinv::cli::run(std::env::args()))
}
