fn main() {
    std::process::exit(garside::cli::main_with_args());
}
