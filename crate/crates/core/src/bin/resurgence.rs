fn main() {
    std::process::exit(resurgence::cli::main());
}
