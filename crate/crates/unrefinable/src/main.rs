fn main() {
    std::process::exit(unrefinable::cli::run());
}
