fn main() {
    std::process::exit(numon::cli::main_with(std::env::args_os()));
}
