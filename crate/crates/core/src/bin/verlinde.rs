fn main() {
    std::process::exit(verlinde::cli::main_with_args(std::env::args_os()));
}
