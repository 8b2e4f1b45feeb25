fn main() {
    std::process::exit(fqhc::cli::run(std::env::args_os()));
}
