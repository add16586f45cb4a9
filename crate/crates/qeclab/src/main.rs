fn main() {
    std::process::exit(qeclab::cli::run(std::env::args_os()));
}
