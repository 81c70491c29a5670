use std::io::{stderr, stdout};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let code = abcelect::cli::run_cli(&args, &mut stdout(), &mut stderr());
    std::process::exit(code);
}
