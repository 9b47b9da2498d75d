fn main() {
    std::process::exit(extscope::cli::main_with_args(std::env::args_os()));
}
