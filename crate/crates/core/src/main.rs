fn main() {
    std::process::exit(signcert::cli::run());
}
