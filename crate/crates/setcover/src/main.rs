fn main() {
    std::process::exit(setcover::cli::main_with_args(std::env::args_os()));
}
