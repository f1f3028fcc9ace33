use std::process::ExitCode;

fn main() -> ExitCode {
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    let code = jfrob::cli::run(std::env::args_os(), &mut out, &mut err);
    ExitCode::from(u8::try_from(code).unwrap_or(1))
}
