fn main() {
    std::process::exit(hsym_cli::main_with(std::env::args_os()));
}
