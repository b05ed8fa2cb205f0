fn main() {
    std::process::exit(centred_sums::cli::run());
}
