fn main() {
    std::process::exit(moduli_cli::run(std::env::args_os()));
}
