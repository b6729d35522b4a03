fn main() {
    std::process::exit(arcnerve_cli::app::main_with_args(std::env::args_os()));
}
