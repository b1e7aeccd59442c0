fn main() {
    std::process::exit(zdense::run());
}
