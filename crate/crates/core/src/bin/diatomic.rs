fn main() {
    std::process::exit(diatomic::cli::main());
}
