fn main() {
    std::process::exit(walkspec::cli::main_with_args(std::env::args_os()));
}
