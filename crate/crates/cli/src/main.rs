use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = cli::run(std::env::args_os());
    let text = out.report.as_bytes();
    let written = if out.code >= 2 {
        std::io::stderr().write_all(text)
    } else {
        std::io::stdout().write_all(text)
    };
    if written.is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(out.code as u8)
}
