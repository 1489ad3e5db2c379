fn main() {
    std::process::exit(shirshov::cli::run());
}
