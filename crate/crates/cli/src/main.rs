fn main() {
    std::process::exit(pandiag_cli::run(std::env::args_os()));
}
