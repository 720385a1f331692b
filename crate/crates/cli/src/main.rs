fn main() {
    std::process::exit(hawking_cv_cli::app::main_with_args(std::env::args_os()));
}
