fn main() {
    std::process::exit(lapgirth::cli::main());
}
