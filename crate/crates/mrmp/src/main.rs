fn main() {
    mrmp::init_logging();
    std::process::exit(mrmp::cli::run(std::env::args_os()));
}
