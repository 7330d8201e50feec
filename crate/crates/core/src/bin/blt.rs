fn main() {
    std::process::exit(blt::cli::main_with_args(std::env::args_os()));
}
