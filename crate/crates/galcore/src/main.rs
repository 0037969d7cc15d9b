use std::process::ExitCode;

fn main() -> ExitCode {
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    ExitCode::from(galcore::cli::run(std::env::args(), &mut out, &mut err) as u8)
}
