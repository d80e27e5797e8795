use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdin = io::stdin();
    let mut out = BufWriter::new(io::stdout().lock());
    let mut err = io::stderr();
    let mut code = dyck_cli::run(std::env::args_os(), &mut stdin.lock(), &mut out, &mut err);
    if let Err(e) = out.flush() {
        if e.kind() != io::ErrorKind::BrokenPipe {
            let _ = writeln!(err, "i/o error: {e}");
            code = dyck_cli::EXIT_INVALID;
        }
    }
    ExitCode::from(code as u8)
}
