fn main() {
    std::process::exit(raagkit::cli::main_with_args(std::env::args_os()));
}
