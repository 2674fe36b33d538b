use std::io::Write;

fn main() {
    let outcome = pellarin::cli::run(std::env::args_os());
    print!("{}", outcome.stdout);
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    std::process::exit(outcome.code);
}
