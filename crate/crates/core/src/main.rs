fn main() {
    std::process::exit(pinched_veronese::cli::run());
}
