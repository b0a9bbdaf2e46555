use std::io::{self, Write};
use std::process::ExitCode;

use partition_cli::{run, Registry};

fn main() -> ExitCode {
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut err = stderr.lock();
    let code = run(std::env::args_os(), &Registry::standard(), &mut out, &mut err);
    let _ = out.flush();
    ExitCode::from(code as u8)
}
