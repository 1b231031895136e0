fn main() { std::process::exit(centrascope::cli::run(std::env::args_os())); }
