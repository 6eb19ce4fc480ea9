fn main() {
    std::process::exit(hypsurf_cli::main_with_args(std::env::args_os()));
}
