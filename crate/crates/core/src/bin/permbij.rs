fn main() {
    std::process::exit(permbij::cli::main_with_args(std::env::args_os()));
}
