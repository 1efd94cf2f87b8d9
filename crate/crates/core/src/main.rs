fn main() {
    std::process::exit(tropkit::cli::run(std::env::args_os()));
}
