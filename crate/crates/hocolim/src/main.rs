fn main() {
    std::process::exit(hocolim::cli::run_from_env());
}
