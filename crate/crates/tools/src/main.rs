use std::process;

fn main() {
    process::exit(brace_tools::cli::run(std::env::args_os()));
}
