fn main() {
    std::process::exit(congestion::cli::run(std::env::args_os()));
}
