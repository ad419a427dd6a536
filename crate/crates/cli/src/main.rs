fn main() {
    std::process::exit(zetakit_cli::run(std::env::args_os()));
}
