use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = vnum_cli::main_with_args(std::env::args_os());
    // one write each, so the report lands whole
    let _ = std::io::stdout().lock().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().lock().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
