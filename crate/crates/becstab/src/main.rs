fn main() {
    std::process::exit(becstab::cli::run());
}
