fn main() {
    std::process::exit(cnum::cli::run(std::env::args_os()));
}
