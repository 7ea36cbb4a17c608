use std::io::Write;
use std::process::ExitCode;

use qtoric::{run, TopClassCache};

fn main() -> ExitCode {
    let cache = TopClassCache::from_env();
    let out = run(std::env::args_os(), &cache);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code)
}
