fn main() {
    std::process::exit(sgx_core::cli::main_with_args(std::env::args_os()));
}
