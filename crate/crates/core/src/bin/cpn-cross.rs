fn main() {
    std::process::exit(cpn_cross::cli::main_with_args(std::env::args_os()));
}
