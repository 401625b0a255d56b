fn main() {
    env_logger::init();
    std::process::exit(hindex_forge::cli::run(std::env::args_os()));
}
