fn main() {
    std::process::exit(psp4::cli::main_with_args(std::env::args_os()));
}
