use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(koszul::cli::run() as u8)
}
