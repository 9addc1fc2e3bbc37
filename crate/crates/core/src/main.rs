fn main() {
    let code = casimir_point::cli::run(std::env::args().skip(1));
    std::process::exit(code);
}
