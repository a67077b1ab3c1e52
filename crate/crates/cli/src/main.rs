use std::io::Write;

fn main() {
    let out = supersym_cli::run(std::env::args_os());
    // Exit codes reflect the result only; a closed pipe is not an error.
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    std::process::exit(out.code);
}
