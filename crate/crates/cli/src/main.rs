fn main() {
    std::process::exit(harmonic_codes_cli::main_with(std::env::args_os()));
}
