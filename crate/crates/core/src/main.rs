fn main() {
    std::process::exit(tomtri::cli::main_with_std());
}
