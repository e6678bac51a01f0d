use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    weylret::init_threads();
    let (out, err, code) = weylret::cli::main_with_args(std::env::args_os());
    // Write errors (e.g. a closed pipe) are not worth a panic.
    let _ = std::io::stdout().write_all(out.as_bytes());
    let _ = std::io::stderr().write_all(err.as_bytes());
    ExitCode::from(code as u8)
}
