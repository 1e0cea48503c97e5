use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let result = polyrecon::cli::run(std::env::args_os());
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(result.output.as_bytes());
    let _ = stdout.flush();
    for line in &result.diagnostics {
        eprintln!("{line}");
    }
    ExitCode::from(result.exit_code as u8)
}
