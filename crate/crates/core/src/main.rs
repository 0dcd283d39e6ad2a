fn main() {
    std::process::exit(fmodule::cli::main_with_args(std::env::args_os()));
}
