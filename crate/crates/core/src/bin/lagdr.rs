fn main() {
    std::process::exit(lagrangian_derham::cli::main_with_args(std::env::args_os()));
}
